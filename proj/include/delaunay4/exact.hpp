#pragma once

// Exact scalars, vectors, matrices and symmetric bilinear forms.
//
// Every quantity in the library is exact. Rationals are GMP rationals kept in
// lowest terms; lattice vectors are small integer tuples.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delaunay4/error.hpp"

namespace d4 {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws Error{ErrorKind::parse} on bad text or
/// a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// An element of the lattice Z^g.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  /// s_I = sum of the basis vectors s_i for i in `indices` (1-based).
  static LatticeVector basis_sum(std::size_t rank, std::initializer_list<int> indices);
  static LatticeVector basis_sum(std::size_t rank, std::span<const int> indices);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  LatticeVector operator*(std::int64_t k) const;

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::string to_string(const LatticeVector& v);

using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticeVector& v);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& k, const RationalVector& a);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RationalVector>& rows);
  static Matrix from_lattice_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& k) const;

  bool operator==(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, each vector scaled to primitive integers.
std::vector<RationalVector> nullspace(const Matrix& m);

/// Unique solution of m x = b. Throws Error{ErrorKind::singular} when m is not
/// square-invertible.
RationalVector solve_linear(const Matrix& m, const RationalVector& b);

/// Returns m^{-1}; throws Error{ErrorKind::singular}.
Matrix inverse(const Matrix& m);

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

std::string_view to_string(Definiteness d);

/// Symmetric bilinear form on Q^g, stored as its Gram matrix.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Throws Error{ErrorKind::invalid_argument} for a non-square or
  /// non-symmetric matrix.
  explicit QuadraticForm(Matrix gram);
  QuadraticForm(std::initializer_list<std::initializer_list<Rational>> rows)
      : QuadraticForm(Matrix(rows)) {}

  static QuadraticForm zero(std::size_t rank);
  static QuadraticForm identity(std::size_t rank);

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  /// B(x, y) = x^T G y.
  Rational evaluate(const RationalVector& x, const RationalVector& y) const;
  Rational evaluate(const LatticeVector& x, const LatticeVector& y) const;
  Rational norm(const LatticeVector& x) const { return evaluate(x, x); }
  /// G y, the covector x -> B(x, y).
  RationalVector apply(const RationalVector& y) const;

  QuadraticForm operator+(const QuadraticForm& other) const;
  QuadraticForm operator-(const QuadraticForm& other) const;
  QuadraticForm scaled(const Rational& k) const;
  bool operator==(const QuadraticForm& other) const { return gram_ == other.gram_; }

  /// Upper-triangle coordinates (i <= j), row by row: the form as a point of
  /// the g(g+1)/2 dimensional space of symmetric matrices.
  RationalVector upper_coords() const;

 private:
  Matrix gram_;
};

/// Free-function spelling used throughout the library.
Rational evaluate(const QuadraticForm& b, const RationalVector& x, const RationalVector& y);

/// Exact classification via LDL^T with symmetric diagonal pivoting.
Definiteness definiteness(const QuadraticForm& b);

/// A^T B A. Throws Error{ErrorKind::singular} for singular A.
QuadraticForm congruence_act(const Matrix& a, const QuadraticForm& b);

/// Integer positive multiple of `b` with coprime entries; identifies rays of
/// forms up to positive scaling. Zero maps to zero.
QuadraticForm primitive_ray(const QuadraticForm& b);

/// Root-free decomposition B(y,y) = sum_i d_i (y_i + sum_{j>i} mu_ij y_j)^2 of a
/// positive definite form.
struct LdlDecomposition {
  std::vector<Rational> diagonal;
  Matrix mu;  // upper triangular, unit diagonal implied
};

/// Throws Error{ErrorKind::not_positive_definite}.
LdlDecomposition ldl(const QuadraticForm& b);

}  // namespace d4
