#pragma once

// Exact rational feasibility: a phase-1 simplex and a Fourier-Motzkin oracle.

#include "colfan/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace colfan {

struct LinearConstraint {
  RatVec coeffs;
  Rational rhs;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

/// Feasibility problem over free rational variables:
///   <a, x> = b  for every equality,
///   <a, x> >= b for every inequality.
struct LPProblem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;

  void add_equality(RatVec coeffs, Rational rhs);
  void add_inequality(RatVec coeffs, Rational rhs);

  /// True iff x satisfies every constraint exactly.
  bool satisfied_by(const RatVec& x) const;
};

/// Returns a feasible point or nullopt. Phase-1 simplex over exact rationals
/// with Bland's rule; deterministic for a fixed constraint order.
std::optional<RatVec> lp_feasible(const LPProblem& lp);

class FourierMotzkinCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFourierMotzkinCap = 8;

/// Feasibility by Gaussian substitution of the equalities followed by
/// Fourier-Motzkin elimination. The cap bounds the number of variables left
/// after the equalities are eliminated.
bool fourier_motzkin(const LPProblem& lp, std::size_t var_cap = kDefaultFourierMotzkinCap);

}  // namespace colfan
