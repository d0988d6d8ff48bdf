#include "colfan/colored_fan.hpp"

#include "colfan/lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace colfan {

SphericalDatum::SphericalDatum(std::size_t dim, Cone valuation_cone, std::vector<Color> colors)
    : dim_(dim), valuation_cone_(std::move(valuation_cone)), colors_(std::move(colors)) {
  if (valuation_cone_.ambient_dim() != dim_)
    throw InputError("valuation cone lives in dimension " +
                     std::to_string(valuation_cone_.ambient_dim()) + ", datum has dimension " +
                     std::to_string(dim_));
  std::set<std::string> names;
  for (const auto& c : colors_) {
    if (!names.insert(c.name).second) throw InputError("duplicate color label \"" + c.name + "\"");
    if (c.rho.size() != dim_)
      throw InputError("color \"" + c.name + "\" has an image of length " +
                       std::to_string(c.rho.size()) + ", expected " + std::to_string(dim_));
  }
}

std::optional<std::size_t> SphericalDatum::find_color(std::string_view name) const {
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i].name == name) return i;
  return std::nullopt;
}

std::size_t SphericalDatum::color_index(std::string_view name) const {
  if (auto i = find_color(name)) return *i;
  throw InputError("unknown color \"" + std::string(name) + "\"");
}

std::vector<std::size_t> SphericalDatum::all_colors() const {
  std::vector<std::size_t> out(colors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

ColoredCone::ColoredCone(Cone c, std::vector<std::size_t> cs) : cone(std::move(c)), colors(std::move(cs)) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
}

bool operator<(const ColoredCone& a, const ColoredCone& b) {
  if (a.cone != b.cone) return a.cone < b.cone;
  return a.colors < b.colors;
}

bool ColoredFan::contains(const ColoredCone& cc) const {
  return std::find(cones.begin(), cones.end(), cc) != cones.end();
}

void check_well_formed(const SphericalDatum& datum, const ColoredCone& cc) {
  if (cc.cone.ambient_dim() != datum.dim())
    throw DimensionError("colored cone lives in dimension " + std::to_string(cc.cone.ambient_dim()) +
                         ", datum has dimension " + std::to_string(datum.dim()));
  for (std::size_t c : cc.colors)
    if (c >= datum.num_colors()) throw InputError("unknown color index " + std::to_string(c));
}

std::optional<RatVec> common_point(const std::vector<const Cone*>& relint_of,
                                   const std::vector<const Cone*>& member_of,
                                   std::size_t n) {
  LPProblem lp;
  lp.num_vars = n;
  for (const Cone* c : relint_of) {
    for (const auto& e : c->equations()) lp.add_equality(e, 0);
    // Homogeneity lets the strict inequality <f, v> > 0 be written as >= 1.
    for (const auto& f : c->facets()) lp.add_inequality(f, 1);
  }
  for (const Cone* c : member_of) {
    for (const auto& e : c->equations()) lp.add_equality(e, 0);
    for (const auto& f : c->facets()) lp.add_inequality(f, 0);
  }
  return lp_feasible(lp);
}

namespace {

std::vector<std::size_t> colors_in_face(const SphericalDatum& datum,
                                        const std::vector<std::size_t>& colors, const Cone& face) {
  std::vector<std::size_t> out;
  for (std::size_t c : colors)
    if (face.contains(datum.rho(c))) out.push_back(c);
  return out;
}

std::vector<ColoredCone> colored_faces_unchecked(const SphericalDatum& datum, const ColoredCone& cc) {
  const Cone& v = datum.valuation_cone();
  std::vector<ColoredCone> out;
  for (auto& f : faces(cc.cone)) {
    if (!common_point({&f}, {&v}, datum.dim())) continue;
    auto colors = colors_in_face(datum, cc.colors, f);
    out.emplace_back(std::move(f), std::move(colors));
  }
  return out;
}

std::string color_set_string(const SphericalDatum& datum, const std::vector<std::size_t>& colors) {
  std::string s = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) s += ",";
    s += datum.color_name(colors[i]);
  }
  return s + "}";
}

}  // namespace

std::string to_string(const SphericalDatum& datum, const ColoredCone& cc) {
  return "(" + to_string(cc.cone) + ", " + color_set_string(datum, cc.colors) + ")";
}

ValidationReport validate_colored_cone(const SphericalDatum& datum, const ColoredCone& cc) {
  check_well_formed(datum, cc);
  ValidationReport report;
  const Cone& v = datum.valuation_cone();

  std::vector<RatVec> gens;
  for (std::size_t c : cc.colors) gens.push_back(datum.rho(c));
  for (const auto& g : intersect(cc.cone, v).generators()) gens.push_back(g);
  const Cone generated = Cone::from_generators(gens, datum.dim());
  report.add("C1", generated == cc.cone,
             generated == cc.cone ? "" : "colors and V-elements generate " + to_string(generated));

  const auto witness = common_point({&cc.cone}, {&v}, datum.dim());
  report.add("C2", witness.has_value(),
             witness ? "relative interior meets V at " + to_string(*witness)
                     : "relative interior is disjoint from V");

  report.add("C3", cc.cone.is_strictly_convex(),
             cc.cone.is_strictly_convex() ? "" : "cone contains the line through " +
                                                     to_string(cc.cone.lineality().front()));

  std::string zero_colors;
  for (std::size_t c : cc.colors)
    if (is_zero(datum.rho(c))) zero_colors += (zero_colors.empty() ? "" : ",") + datum.color_name(c);
  report.add("C4", zero_colors.empty(),
             zero_colors.empty() ? "" : "colors with zero image: " + zero_colors);
  return report;
}

std::vector<ColoredCone> colored_faces(const SphericalDatum& datum, const ColoredCone& cc) {
  const auto report = validate_colored_cone(datum, cc);
  if (const auto* bad = report.first_failure())
    throw AxiomViolation(bad->name, "colored cone " + to_string(datum, cc) + " is invalid: " + bad->detail);
  return colored_faces_unchecked(datum, cc);
}

ValidationReport validate_colored_fan(const SphericalDatum& datum, const ColoredFan& fan) {
  for (const auto& cc : fan.cones) check_well_formed(datum, cc);
  ValidationReport report;
  report.notes.push_back(kColoredFaceConvention);

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto cone_report = validate_colored_cone(datum, fan.cones[i]);
    for (const auto& a : cone_report.axioms)
      report.add("cone[" + std::to_string(i) + "]." + a.name, a.passed, a.detail);
  }

  std::string missing;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (const auto& face : colored_faces_unchecked(datum, fan.cones[i])) {
      if (fan.contains(face)) continue;
      if (!missing.empty()) missing += "; ";
      missing += "missing colored face " + to_string(datum, face) + " of cone[" + std::to_string(i) + "]";
    }
  }
  report.add("F1", missing.empty(), missing);

  const Cone& v = datum.valuation_cone();
  std::string overlaps;
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      const auto p = common_point({&fan.cones[i].cone, &fan.cones[j].cone}, {&v}, datum.dim());
      if (!p) continue;
      if (!overlaps.empty()) overlaps += "; ";
      overlaps += "cone[" + std::to_string(i) + "] and cone[" + std::to_string(j) +
                  "] share the V-point " + to_string(*p) + " in their relative interiors";
    }
  report.add("F2", overlaps.empty(), overlaps);
  return report;
}

std::optional<ColoredCone> locate(const SphericalDatum& datum, const ColoredFan& fan, const RatVec& v) {
  require_dim(v, datum.dim(), "locate");
  if (!datum.valuation_cone().contains(v))
    throw OutsideValuationCone("point " + to_string(v) + " is not in the valuation cone");
  for (const auto& cc : fan.cones)
    if (cc.cone.in_relative_interior(v)) return cc;
  return std::nullopt;
}

ColoredFan face_closure(const SphericalDatum& datum, const std::vector<ColoredCone>& cones) {
  std::set<ColoredCone> all;
  for (const auto& cc : cones)
    for (auto& f : colored_faces(datum, cc)) all.insert(std::move(f));
  return ColoredFan{std::vector<ColoredCone>(all.begin(), all.end())};
}

std::vector<std::size_t> maximal_members(const SphericalDatum& datum, const ColoredFan& fan) {
  std::vector<bool> dominated(fan.cones.size(), false);
  for (const auto& parent : fan.cones) {
    for (const auto& face : colored_faces_unchecked(datum, parent)) {
      if (face == parent) continue;
      for (std::size_t k = 0; k < fan.cones.size(); ++k)
        if (fan.cones[k] == face) dominated[k] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < fan.cones.size(); ++k)
    if (!dominated[k]) out.push_back(k);
  return out;
}

void require_valid_fan(const SphericalDatum& datum, const ColoredFan& fan) {
  const auto report = validate_colored_fan(datum, fan);
  if (const auto* bad = report.first_failure()) throw AxiomViolation(bad->name, "invalid colored fan: " + bad->detail);
}

}  // namespace colfan
