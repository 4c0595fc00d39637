#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace d4 {

/// Failure categories; the C API maps each to a status code.
enum class ErrorKind {
  parse,
  invalid_argument,
  dimension_mismatch,
  singular,
  not_cospherical,
  not_positive_definite,
  unknown_name,
  not_a_refinement,
  internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace d4
