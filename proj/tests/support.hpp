#pragma once

// Shorthand shared by the test programs.

#include <initializer_list>
#include <ostream>
#include <vector>

#include "delaunay4/catalog.hpp"
#include "delaunay4/delaunay.hpp"

namespace d4 {

// Readable gtest failure output.
inline void PrintTo(const LatticeVector& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const DelaunayCell& c, std::ostream* os) { *os << to_string(c); }

}  // namespace d4

namespace d4::test {

/// s_I in rank g, e.g. s(2, {1, 2}) = (1, 1).
inline LatticeVector s(std::size_t g, std::initializer_list<int> idx) { return LatticeVector::basis_sum(g, idx); }

inline LatticeVector zero(std::size_t g) { return LatticeVector(g); }

inline DelaunayCell cell(std::vector<LatticeVector> v) { return make_cell(std::move(v)); }

inline const QuadraticForm& hexagonal() {
  static const QuadraticForm b{{2, -1}, {-1, 2}};
  return b;
}

// The five cells of the rank-2 picture.
inline DelaunayCell sigma1() { return cell({zero(2), s(2, {1}), s(2, {1, 2})}); }
inline DelaunayCell sigma2() { return cell({zero(2), s(2, {2}), s(2, {1, 2})}); }
inline DelaunayCell sigma3() { return cell({zero(2), s(2, {1}), s(2, {2})}); }
inline DelaunayCell sigma4() { return cell({s(2, {1}), s(2, {2}), s(2, {1, 2})}); }
inline DelaunayCell sigma5() { return cell({zero(2), s(2, {1}), s(2, {2}), s(2, {1, 2})}); }

inline RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

}  // namespace d4::test
