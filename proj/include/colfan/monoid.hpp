#pragma once

// Reductive monoids: single colored cones carrying every color, their
// forms under finite group actions, fan morphisms and the lined-closure
// real-form test.

#include "colfan/galois.hpp"

#include <map>
#include <optional>
#include <set>

namespace colfan {

struct MonoidCheck {
  bool verdict = false;
  ValidationReport report;  // "all colors", C1..C4
};

MonoidCheck is_monoid_cone(const SphericalDatum& datum, const ColoredCone& cc);

/// (cone(rho(all colors) ∪ vs), all colors). Throws AxiomViolation naming
/// the failed axiom; InputError when some v is outside V.
ColoredCone monoid_cone_from_valuations(const SphericalDatum& datum, const std::vector<RatVec>& vs);

struct MonoidKFormResult {
  bool verdict = false;
  std::optional<bool> lp_verdict;  // set when the LP cross-check was forced
};

/// Invariance of the face closure of cc. The LP check is skipped because an
/// affine embedding's fan is always quasiprojective; force_lp runs it anyway.
MonoidKFormResult monoid_has_k_form(const SphericalDatum& datum, const GroupAction& action,
                                    const ColoredCone& cc, bool force_lp = false);

/// A surjective linear map between valuation spaces with its color data.
struct MorphismData {
  RatMat matrix;                                  // Q_Y -> Q_Z
  std::map<std::size_t, std::size_t> color_map;   // defined on non-dominant colors of Y
  std::set<std::size_t> dominant_colors;          // colors of Y mapped densely
};

/// Full row rank, color map domain = colors of Y minus dominant ones, and
/// image of V_Y equal to V_Z. Throws InputError describing the violation.
void check_morphism_data(const SphericalDatum& source, const SphericalDatum& target, const MorphismData& m);

struct MorphismCheck {
  bool verdict = false;
  /// For each member of the source fan, the index of the first target member
  /// it maps into, or nullopt.
  std::vector<std::optional<std::size_t>> assignment;
};

MorphismCheck check_fan_morphism(const SphericalDatum& source, const SphericalDatum& target,
                                 const MorphismData& m, const ColoredFan& source_fan,
                                 const ColoredFan& target_fan);

class NotAnInvolution : public InputError {
 public:
  using InputError::InputError;
};

/// Given a candidate involution theta, checks theta * lambda = -lambda.
/// Throws NotAnInvolution when theta^2 != 1.
bool lined_closure_real_form(const RatVec& lambda, const RatMat& theta);

}  // namespace colfan
