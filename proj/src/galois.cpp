#include "colfan/galois.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace colfan {

GroupElement GroupElement::compose(const GroupElement& inner) const {
  GroupElement out;
  out.matrix = matrix * inner.matrix;
  out.color_perm.resize(inner.color_perm.size());
  for (std::size_t i = 0; i < inner.color_perm.size(); ++i) out.color_perm[i] = color_perm[inner.color_perm[i]];
  return out;
}

ColoredCone GroupElement::apply(const ColoredCone& cc) const {
  std::vector<std::size_t> colors;
  colors.reserve(cc.colors.size());
  for (std::size_t c : cc.colors) colors.push_back(color_perm.at(c));
  return ColoredCone(image(cc.cone, matrix), std::move(colors));
}

GroupElement identity_element(const SphericalDatum& datum) {
  return GroupElement{RatMat::identity(datum.dim()), datum.all_colors()};
}

namespace {

std::string matrix_string(const RatMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "," : "") + to_string(m.row(i));
  return s + "]";
}

}  // namespace

std::vector<GroupElement> group_closure(const SphericalDatum& datum,
                                        const std::vector<GroupElement>& generators, std::size_t cap) {
  std::set<GroupElement> seen{identity_element(datum)};
  std::deque<GroupElement> frontier{identity_element(datum)};
  while (!frontier.empty()) {
    const GroupElement current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      GroupElement next = g.compose(current);
      if (!seen.insert(next).second) continue;
      if (seen.size() > cap)
        throw GroupCapExceeded("group closure exceeds the cap of " + std::to_string(cap) + " elements");
      frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

ValidationReport validate_action(const SphericalDatum& datum, const std::vector<GroupElement>& generators,
                                 std::size_t cap) {
  ValidationReport report;
  const std::size_t n = datum.dim();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    const std::string tag = "generator[" + std::to_string(k) + "].";
    if (g.matrix.rows() != n || g.matrix.cols() != n)
      throw InputError(tag + "matrix must be " + std::to_string(n) + "x" + std::to_string(n));

    std::vector<std::size_t> sorted = g.color_perm;
    std::sort(sorted.begin(), sorted.end());
    const bool bijective = sorted == datum.all_colors();
    report.add(tag + "color permutation", bijective,
               bijective ? "" : "color map is not a bijection of the datum's colors");

    const Rational det = g.matrix.is_square() ? determinant(g.matrix) : Rational(0);
    const bool lattice = g.matrix.is_integral() && (det == 1 || det == -1);
    report.add(tag + "lattice automorphism", lattice,
               lattice ? "" : "matrix " + matrix_string(g.matrix) + " is not a lattice automorphism");

    std::string bad_colors;
    if (bijective) {
      for (std::size_t c = 0; c < datum.num_colors(); ++c)
        if (g.matrix.apply(datum.rho(c)) != datum.rho(g.color_perm[c]))
          bad_colors += (bad_colors.empty() ? "" : ",") + datum.color_name(c);
    }
    report.add(tag + "equivariance", bijective && bad_colors.empty(),
               bad_colors.empty() ? "" : "matrix * rho(D) != rho(g D) for D in {" + bad_colors + "}");

    const bool stable = image(datum.valuation_cone(), g.matrix) == datum.valuation_cone();
    report.add(tag + "V-stability", stable, stable ? "" : "valuation cone is not mapped onto itself");
  }
  if (report.passed()) {
    const auto elements = group_closure(datum, generators, cap);
    report.add("order", true, std::to_string(elements.size()));
  }
  return report;
}

GroupAction GroupAction::create(const SphericalDatum& datum, std::vector<GroupElement> generators,
                                std::size_t cap) {
  const auto report = validate_action(datum, generators, cap);
  if (const auto* bad = report.first_failure()) {
    const auto dot_pos = bad->name.find('.');
    throw AxiomViolation(dot_pos == std::string::npos ? bad->name : bad->name.substr(dot_pos + 1),
                         bad->name.substr(0, dot_pos) + ": " + bad->detail);
  }
  GroupAction action;
  action.elements_ = group_closure(datum, generators, cap);
  action.generators_ = std::move(generators);
  return action;
}

GroupAction GroupAction::trivial(const SphericalDatum& datum) { return create(datum, {}); }

namespace {

struct Offense {
  ColoredCone member;
  ColoredCone missing_image;
};

std::optional<Offense> first_non_invariant(const GroupAction& action, const ColoredFan& fan) {
  for (const auto& cc : fan.cones)
    for (const auto& g : action.elements()) {
      auto img = g.apply(cc);
      if (!fan.contains(img)) return Offense{cc, std::move(img)};
    }
  return std::nullopt;
}

}  // namespace

bool is_fan_invariant(const SphericalDatum& datum, const GroupAction& action, const ColoredFan& fan) {
  for (const auto& cc : fan.cones) check_well_formed(datum, cc);
  return !first_non_invariant(action, fan).has_value();
}

ColoredFan orbit_subfan(const SphericalDatum& datum, const GroupAction& action, const ColoredCone& cc) {
  std::set<ColoredCone> orbit;
  for (const auto& g : action.elements()) orbit.insert(g.apply(cc));
  ColoredFan fan = face_closure(datum, {orbit.begin(), orbit.end()});
  const auto report = validate_colored_fan(datum, fan);
  if (const auto* f2 = report.find("F2"); f2 && !f2->passed)
    throw OrbitOverlap("orbit of " + to_string(datum, cc) + " overlaps itself: " + f2->detail);
  return fan;
}

KFormResult has_k_form(const SphericalDatum& datum, const GroupAction& action, const ColoredFan& fan) {
  require_valid_fan(datum, fan);
  KFormResult result;
  auto& report = result.report;
  report.notes.push_back(kSpaceVersusVarietyNote);
  report.notes.push_back(kPerfectFieldNote);
  report.notes.push_back(kMaximalConeNote);

  const auto offense = first_non_invariant(action, fan);
  result.invariant = !offense.has_value();
  report.add("(a) invariance", result.invariant,
             offense ? "(a) fan not Γ-invariant, offending cone: " + to_string(datum, offense->member) +
                           " (image " + to_string(datum, offense->missing_image) + " is not a member)"
                     : "");

  // Largest members first, so faces can reuse the verdict of a parent whose
  // orbit fan already contains their whole orbit.
  std::vector<std::set<ColoredCone>> passed_orbit_fans;
  bool all_quasiprojective = true;
  std::string failures;
  for (auto it = fan.cones.rbegin(); it != fan.cones.rend(); ++it) {
    const ColoredCone& cc = *it;
    std::set<ColoredCone> orbit;
    for (const auto& g : action.elements()) orbit.insert(g.apply(cc));
    const bool covered = std::any_of(passed_orbit_fans.begin(), passed_orbit_fans.end(), [&](const auto& f) {
      return std::includes(f.begin(), f.end(), orbit.begin(), orbit.end());
    });
    if (covered) continue;

    try {
      const ColoredFan sub = orbit_subfan(datum, action, cc);
      if (is_quasiprojective(datum, sub).verdict) {
        passed_orbit_fans.emplace_back(sub.cones.begin(), sub.cones.end());
      } else {
        all_quasiprojective = false;
        failures += (failures.empty() ? "" : "; ") + std::string("orbit fan of ") + to_string(datum, cc) +
                    " is not quasiprojective";
      }
    } catch (const OrbitOverlap& e) {
      all_quasiprojective = false;
      failures += (failures.empty() ? "" : "; ") + std::string(e.what());
    }
  }
  result.orbit_fans_quasiprojective = all_quasiprojective;
  report.add("(b) orbit fans quasiprojective", all_quasiprojective, failures.empty() ? "" : "(b) " + failures);
  result.verdict = result.invariant && result.orbit_fans_quasiprojective;
  return result;
}

}  // namespace colfan
