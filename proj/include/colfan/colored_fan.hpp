#pragma once

// Spherical data, colored cones and colored fans.

#include "colfan/cone.hpp"
#include "colfan/errors.hpp"
#include "colfan/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colfan {

struct Color {
  std::string name;
  RatVec rho;  // image under the color map into Q^n
};

/// The combinatorial invariants of a spherical homogeneous space:
/// ambient dimension n, the valuation cone V, the colors and their images.
class SphericalDatum {
 public:
  SphericalDatum(std::size_t dim, Cone valuation_cone, std::vector<Color> colors);

  std::size_t dim() const { return dim_; }
  const Cone& valuation_cone() const { return valuation_cone_; }
  const std::vector<Color>& colors() const { return colors_; }
  std::size_t num_colors() const { return colors_.size(); }
  const RatVec& rho(std::size_t color) const { return colors_.at(color).rho; }
  const std::string& color_name(std::size_t color) const { return colors_.at(color).name; }

  std::optional<std::size_t> find_color(std::string_view name) const;
  /// Throws InputError naming the label when it is unknown.
  std::size_t color_index(std::string_view name) const;
  std::vector<std::size_t> all_colors() const;

 private:
  std::size_t dim_;
  Cone valuation_cone_;
  std::vector<Color> colors_;
};

/// A cone together with a set of colors, given as sorted indices into the
/// datum's color list.
struct ColoredCone {
  Cone cone;
  std::vector<std::size_t> colors;

  ColoredCone() = default;
  ColoredCone(Cone c, std::vector<std::size_t> cs);

  friend bool operator==(const ColoredCone&, const ColoredCone&) = default;
  friend bool operator<(const ColoredCone& a, const ColoredCone& b);
};

struct ColoredFan {
  std::vector<ColoredCone> cones;

  bool contains(const ColoredCone& cc) const;
};

/// Checks membership of every color index and the ambient dimension.
void check_well_formed(const SphericalDatum& datum, const ColoredCone& cc);

/// Is there a point lying in the relative interior of every cone in
/// `relint_of` and in every cone of `member_of`? Decided by the exact LP.
std::optional<RatVec> common_point(const std::vector<const Cone*>& relint_of,
                                   const std::vector<const Cone*>& member_of,
                                   std::size_t ambient_dim);

/// Axioms C1-C4.
ValidationReport validate_colored_cone(const SphericalDatum& datum, const ColoredCone& cc);

/// Colored faces: geometric faces whose relative interior meets V, each with
/// the colors whose image lies in the face. Throws AxiomViolation when cc
/// fails C1-C4.
std::vector<ColoredCone> colored_faces(const SphericalDatum& datum, const ColoredCone& cc);

/// Per-member C1-C4, face closure (F1) and disjointness of V-relative
/// interiors (F2).
ValidationReport validate_colored_fan(const SphericalDatum& datum, const ColoredFan& fan);

class OutsideValuationCone : public InputError {
 public:
  using InputError::InputError;
};

/// The member whose cone has v in its relative interior. Throws
/// OutsideValuationCone when v is not in V.
std::optional<ColoredCone> locate(const SphericalDatum& datum, const ColoredFan& fan,
                                  const RatVec& v);

/// Closes a list of colored cones under colored faces; output sorted and
/// deduplicated.
ColoredFan face_closure(const SphericalDatum& datum, const std::vector<ColoredCone>& cones);

/// Indices of members that are not a proper colored face of another member.
std::vector<std::size_t> maximal_members(const SphericalDatum& datum, const ColoredFan& fan);

/// Throws AxiomViolation naming the first failed axiom when the fan is invalid.
void require_valid_fan(const SphericalDatum& datum, const ColoredFan& fan);

std::string to_string(const SphericalDatum& datum, const ColoredCone& cc);

inline constexpr const char* kColoredFaceConvention =
    "colored face convention: F is a colored face of (C, D') iff F is a face of C whose relative "
    "interior meets V; it carries exactly the colors D in D' with rho(D) in F";

}  // namespace colfan
