#include "colfan/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace colfan {

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows, RatVec(cols)), cols_(cols) {}

RatMat::RatMat(std::vector<RatVec> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionError("matrix rows have unequal length");
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.size() != cols_)
    throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has length " +
                         std::to_string(v.size()));
  RatVec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

RatMat RatMat::operator*(const RatMat& other) const {
  if (cols_ != other.rows()) throw DimensionError("matrix product shape mismatch");
  RatMat out(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k] == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) out(i, j) += rows_[i][k] * other(k, j);
    }
  return out;
}

RatMat RatMat::transpose() const {
  RatMat out(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = rows_[i][j];
  return out;
}

bool RatMat::is_integral() const {
  for (const auto& r : rows_)
    for (const auto& x : r)
      if (x.get_den() != 1) return false;
  return true;
}

RatVec zero_vec(std::size_t n) { return RatVec(n); }

RatVec unit_vec(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

RatVec from_ints(std::span<const long> values) {
  RatVec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVec from_ints(std::initializer_list<long> values) {
  return from_ints(std::span<const long>(values.begin(), values.size()));
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum of different lengths");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference of different lengths");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const RatVec& a, const Rational& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

RatVec negate(const RatVec& a) { return scale(a, Rational(-1)); }

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

RatVec primitive(const RatVec& a) {
  if (is_zero(a)) return a;
  mpz_class lcm_den = 1;
  for (const auto& x : a) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints(a.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ints[i] = a[i].get_num() * (lcm_den / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

std::vector<RatVec> rref(std::vector<RatVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = 1 / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[r][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const std::vector<RatVec>& rows) { return rref(rows).size(); }

std::vector<RatVec> null_space(const std::vector<RatVec>& rows, std::size_t n) {
  auto r = rref(rows);
  std::vector<std::size_t> pivots;
  for (const auto& row : r) {
    std::size_t j = 0;
    while (row[j] == 0) ++j;
    pivots.push_back(j);
  }
  std::vector<RatVec> basis;
  std::size_t p = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (p < pivots.size() && pivots[p] == free) {
      ++p;
      continue;
    }
    RatVec v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis);
}

RatVec project_onto_span(const RatVec& v, const std::vector<RatVec>& basis) {
  if (basis.empty()) return RatVec(v.size());
  auto b = rref(basis);
  const std::size_t k = b.size();
  // Solve (B B^T) c = B v, then return B^T c.
  std::vector<RatVec> aug(k, RatVec(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = dot(b[i], b[j]);
    aug[i][k] = dot(b[i], v);
  }
  auto solved = rref(aug);
  RatVec out(v.size());
  for (std::size_t i = 0; i < k; ++i) out = add(out, scale(b[i], solved[i][k]));
  return out;
}

std::vector<RatVec> canonical_basis(const std::vector<RatVec>& rows) {
  auto r = rref(rows);
  for (auto& row : r) row = primitive(row);
  return r;
}

Rational determinant(const RatMat& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVec> a = m.row_list();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVec> aug(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  auto r = rref(aug);
  if (r.size() < n || r[n - 1][n - 1] != 1) throw std::domain_error("matrix is singular");
  for (std::size_t i = 0; i < n; ++i)
    if (r[i][i] != 1) throw std::domain_error("matrix is singular");
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r[i][n + j];
  return out;
}

std::string to_fraction_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

void require_dim(const RatVec& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                         std::to_string(v.size()));
}

}  // namespace colfan
