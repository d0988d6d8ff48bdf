#pragma once

// Exact rational vectors and matrices.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace colfan {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Thrown when operands disagree on dimension or shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major rational matrix.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);
  explicit RatMat(std::vector<RatVec> rows);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const RatVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<RatVec>& row_list() const { return rows_; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  RatVec apply(const RatVec& v) const;
  RatMat operator*(const RatMat& other) const;
  RatMat transpose() const;

  bool is_square() const { return rows_.size() == cols_; }
  bool is_integral() const;

  friend bool operator==(const RatMat&, const RatMat&) = default;
  friend bool operator<(const RatMat& a, const RatMat& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<RatVec> rows_;
  std::size_t cols_ = 0;
};

RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);
RatVec from_ints(std::span<const long> values);
RatVec from_ints(std::initializer_list<long> values);

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& s);
RatVec negate(const RatVec& a);
bool is_zero(const RatVec& a);

/// Scales to the unique integer vector with content 1 on the same ray.
/// The zero vector is returned unchanged.
RatVec primitive(const RatVec& a);

/// Reduced row echelon form; zero rows are dropped.
std::vector<RatVec> rref(std::vector<RatVec> rows);
std::size_t rank(const std::vector<RatVec>& rows);

/// Basis of {x : <r, x> = 0 for every r in rows}, as primitive rows in
/// reduced echelon order.
std::vector<RatVec> null_space(const std::vector<RatVec>& rows, std::size_t n);

/// Orthogonal projection of v onto the span of `basis` (standard inner product).
RatVec project_onto_span(const RatVec& v, const std::vector<RatVec>& basis);

/// Canonical basis of a subspace: rref rows scaled to primitive integer vectors.
std::vector<RatVec> canonical_basis(const std::vector<RatVec>& rows);

/// Determinant of a square matrix by fraction-free elimination over Q.
Rational determinant(const RatMat& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
RatMat inverse(const RatMat& m);

/// "p/q" with q > 0 and gcd(p, q) = 1.
std::string to_fraction_string(const Rational& r);
std::string to_string(const RatVec& v);

void require_dim(const RatVec& v, std::size_t n, const char* what);

}  // namespace colfan
