#pragma once

// Finite group actions on spherical data and k-form existence.

#include "colfan/colored_fan.hpp"
#include "colfan/quasiprojective.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace colfan {

/// A lattice automorphism of Q^n together with a permutation of the colors.
/// color_perm[i] is the image of color i.
struct GroupElement {
  RatMat matrix;
  std::vector<std::size_t> color_perm;

  GroupElement compose(const GroupElement& inner) const;  // this ∘ inner
  ColoredCone apply(const ColoredCone& cc) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.matrix != b.matrix) return a.matrix < b.matrix;
    return a.color_perm < b.color_perm;
  }
};

GroupElement identity_element(const SphericalDatum& datum);

class GroupCapExceeded : public InputError {
 public:
  using InputError::InputError;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// A finite group given by generators; the closure is computed eagerly by
/// GroupAction::create, which validates every generator first.
class GroupAction {
 public:
  /// Throws AxiomViolation ("lattice automorphism", "equivariance",
  /// "V-stability") or GroupCapExceeded.
  static GroupAction create(const SphericalDatum& datum, std::vector<GroupElement> generators,
                            std::size_t cap = kDefaultGroupCap);
  static GroupAction trivial(const SphericalDatum& datum);

  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Sorted, identity included.
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

/// Closure of the generators under composition. Throws GroupCapExceeded.
std::vector<GroupElement> group_closure(const SphericalDatum& datum,
                                        const std::vector<GroupElement>& generators,
                                        std::size_t cap = kDefaultGroupCap);

/// Per-generator checks (lattice automorphism, equivariance, V-stability)
/// followed by the closure order, reported under "order".
ValidationReport validate_action(const SphericalDatum& datum, const std::vector<GroupElement>& generators,
                                 std::size_t cap = kDefaultGroupCap);

bool is_fan_invariant(const SphericalDatum& datum, const GroupAction& action, const ColoredFan& fan);

/// Thrown when the translates of a colored cone overlap in V-relative
/// interiors, so that no invariant fan contains the whole orbit.
class OrbitOverlap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Face closure of the orbit of cc.
ColoredFan orbit_subfan(const SphericalDatum& datum, const GroupAction& action, const ColoredCone& cc);

struct KFormResult {
  bool verdict = false;
  bool invariant = false;               // condition (a)
  bool orbit_fans_quasiprojective = false;  // condition (b)
  ValidationReport report;
};

/// (a) the fan is invariant and (b) every member's orbit fan is
/// quasiprojective.
KFormResult has_k_form(const SphericalDatum& datum, const GroupAction& action, const ColoredFan& fan);

inline constexpr const char* kSpaceVersusVarietyNote =
    "condition (a) alone classifies spherical spaces over k (algebraic spaces); condition (b) is "
    "the additional requirement for a k-form that is a variety";
inline constexpr const char* kPerfectFieldNote =
    "the orbit-fan criterion for varieties assumes a perfect base field";

}  // namespace colfan
