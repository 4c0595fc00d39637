#include "delaunay4/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace d4 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::singular: return "singular";
    case ErrorKind::not_cospherical: return "not_cospherical";
    case ErrorKind::not_positive_definite: return "not_positive_definite";
    case ErrorKind::unknown_name: return "unknown_name";
    case ErrorKind::not_a_refinement: return "not_a_refinement";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(what) + ": size " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer numerator(n, 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) {
    throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// ---------------------------------------------------------------- vectors

LatticeVector LatticeVector::basis_sum(std::size_t rank, std::initializer_list<int> indices) {
  std::vector<int> idx(indices);
  return basis_sum(rank, std::span<const int>(idx));
}

LatticeVector LatticeVector::basis_sum(std::size_t rank, std::span<const int> indices) {
  LatticeVector v(rank);
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > rank) {
      throw Error(ErrorKind::invalid_argument, "basis index out of range");
    }
    v[static_cast<std::size_t>(i - 1)] += 1;
  }
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  require_same_size(rank(), other.rank(), "lattice add");
  LatticeVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = coords_[i] + other[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  require_same_size(rank(), other.rank(), "lattice subtract");
  LatticeVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = coords_[i] - other[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = -coords_[i];
  return r;
}

LatticeVector LatticeVector::operator*(std::int64_t k) const {
  LatticeVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = coords_[i] * k;
  return r;
}

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = static_cast<long>(v[i]);
  return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size(), "vector add");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size(), "vector subtract");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& k, const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------- matrices

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::dimension_mismatch, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), m.cols(), "matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_lattice_rows(std::span<const LatticeVector> rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].rank());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].rank(), m.cols(), "matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_same_size(cols_, other.rows_, "matrix product");
  Matrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

RationalVector Matrix::operator*(const RationalVector& v) const {
  require_same_size(cols_, v.size(), "matrix-vector product");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_size(rows_, other.rows_, "matrix add");
  require_same_size(cols_, other.cols_, "matrix add");
  Matrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + other.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_size(rows_, other.rows_, "matrix subtract");
  require_same_size(cols_, other.cols_, "matrix subtract");
  Matrix s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - other.data_[i];
  return s;
}

Matrix Matrix::scaled(const Rational& k) const {
  Matrix s = *this;
  for (auto& x : s.data_) x *= k;
  return s;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalVector make_primitive(RationalVector v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "determinant of non-square matrix");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return row_reduce(a).size();
}

std::vector<RationalVector> nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

RationalVector solve_linear(const Matrix& m, const RationalVector& b) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::singular, "solve_linear: non-square system");
  require_same_size(m.rows(), b.size(), "solve_linear");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots.back() >= n) throw Error(ErrorKind::singular, "solve_linear: singular matrix");
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::singular, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw Error(ErrorKind::singular, "inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

// ---------------------------------------------------------------- forms

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite";
    case Definiteness::indefinite: return "indefinite";
  }
  return "indefinite";
}

QuadraticForm::QuadraticForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorKind::invalid_argument, "form matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw Error(ErrorKind::invalid_argument, "form matrix must be symmetric");
}

QuadraticForm QuadraticForm::zero(std::size_t rank) { return QuadraticForm(Matrix(rank, rank)); }

QuadraticForm QuadraticForm::identity(std::size_t rank) { return QuadraticForm(Matrix::identity(rank)); }

Rational QuadraticForm::evaluate(const RationalVector& x, const RationalVector& y) const {
  require_same_size(x.size(), rank(), "evaluate");
  require_same_size(y.size(), rank(), "evaluate");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rational QuadraticForm::evaluate(const LatticeVector& x, const LatticeVector& y) const {
  require_same_size(x.rank(), rank(), "evaluate");
  require_same_size(y.rank(), rank(), "evaluate");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (y[j] == 0) continue;
      s += gram_(i, j) * static_cast<long>(x[i] * y[j]);
    }
  }
  return s;
}

RationalVector QuadraticForm::apply(const RationalVector& y) const { return gram_ * y; }

QuadraticForm QuadraticForm::operator+(const QuadraticForm& other) const {
  return QuadraticForm(gram_ + other.gram_);
}

QuadraticForm QuadraticForm::operator-(const QuadraticForm& other) const {
  return QuadraticForm(gram_ - other.gram_);
}

QuadraticForm QuadraticForm::scaled(const Rational& k) const { return QuadraticForm(gram_.scaled(k)); }

RationalVector QuadraticForm::upper_coords() const {
  RationalVector v;
  v.reserve(rank() * (rank() + 1) / 2);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i; j < rank(); ++j) v.push_back(gram_(i, j));
  return v;
}

Rational evaluate(const QuadraticForm& b, const RationalVector& x, const RationalVector& y) {
  return b.evaluate(x, y);
}

Definiteness definiteness(const QuadraticForm& b) {
  Matrix a = b.gram();
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  bool zero_pivot = false;
  for (std::size_t step = 0; step < n; ++step) {
    // Pivot on the first remaining nonzero diagonal entry.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Remaining diagonal is zero: semidefinite only if the residual block is zero.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) return Definiteness::indefinite;
      zero_pivot = true;
      break;
    }
    if (a(p, p) < 0) return Definiteness::indefinite;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  return zero_pivot ? Definiteness::positive_semidefinite : Definiteness::positive_definite;
}

QuadraticForm congruence_act(const Matrix& a, const QuadraticForm& b) {
  if (a.rows() != b.rank() || a.cols() != b.rank())
    throw Error(ErrorKind::dimension_mismatch, "congruence_act: matrix and form ranks differ");
  if (determinant(a) == 0) throw Error(ErrorKind::singular, "congruence_act: singular transformation");
  return QuadraticForm(a.transpose() * b.gram() * a);
}

QuadraticForm primitive_ray(const QuadraticForm& b) {
  const std::size_t n = b.rank();
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(b(i, j).get_den()));
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g = gcd(g, Integer(Rational(b(i, j) * l).get_num()));
  if (g == 0) return b;
  return b.scaled(Rational(l) / Rational(g));
}

LdlDecomposition ldl(const QuadraticForm& b) {
  const std::size_t n = b.rank();
  Matrix a = b.gram();
  LdlDecomposition out{std::vector<Rational>(n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) <= 0) throw Error(ErrorKind::not_positive_definite, "form is not positive definite");
    out.diagonal[i] = a(i, i);
    out.mu(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = a(i, j) / a(i, i);
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) a(r, c) -= out.mu(i, r) * a(i, c);
  }
  return out;
}

}  // namespace d4
