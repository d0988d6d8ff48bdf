#pragma once

// Quasiprojectivity of colored fans as an exact LP feasibility problem.

#include "colfan/colored_fan.hpp"
#include "colfan/lp.hpp"

#include <optional>
#include <vector>

namespace colfan {

/// The linear form l_Z attached to the maximal member `cone_index`.
struct SupportForm {
  std::size_t cone_index = 0;  // index into ColoredFan::cones
  RatVec coefficients;
};

struct SupportLP {
  LPProblem problem;
  /// Fan index of the maximal member owning variables [k*n, (k+1)*n).
  std::vector<std::size_t> maximal;
};

/// Variables are the coefficients of one linear form per maximal member.
///  - agreement: <l_Z - l_Z', g> = 0 for every ray g of C_Z ∩ C_Z' (unordered pairs)
///  - separation: with K_Z = C_Z ∩ V and w_Z its interior point,
///    <l_Z - l_Z', g> >= 0 for every ray g of K_Z and <l_Z - l_Z', w_Z> >= 1
///    (ordered pairs of distinct maximal members).
/// The fan is validated first.
SupportLP build_support_lp(const SphericalDatum& datum, const ColoredFan& fan);

struct QuasiprojectivityResult {
  bool verdict = false;
  std::optional<std::vector<SupportForm>> witness;
};

/// A returned witness has been re-checked against every constraint.
QuasiprojectivityResult is_quasiprojective(const SphericalDatum& datum, const ColoredFan& fan);

inline constexpr const char* kMaximalConeNote =
    "forms are attached to maximal cones only; faces inherit them, and separation uses relative "
    "interiors";

}  // namespace colfan
