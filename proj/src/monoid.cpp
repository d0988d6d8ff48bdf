#include "colfan/monoid.hpp"

#include <algorithm>

namespace colfan {

MonoidCheck is_monoid_cone(const SphericalDatum& datum, const ColoredCone& cc) {
  check_well_formed(datum, cc);
  MonoidCheck out;
  const bool all = cc.colors == datum.all_colors();
  out.report.add("all colors", all, all ? "" : "a monoid cone must carry every color of the datum");
  for (auto& a : validate_colored_cone(datum, cc).axioms) out.report.axioms.push_back(std::move(a));
  out.verdict = out.report.passed();
  return out;
}

ColoredCone monoid_cone_from_valuations(const SphericalDatum& datum, const std::vector<RatVec>& vs) {
  std::vector<RatVec> gens;
  for (std::size_t c = 0; c < datum.num_colors(); ++c) gens.push_back(datum.rho(c));
  for (const auto& v : vs) {
    require_dim(v, datum.dim(), "valuation");
    if (!datum.valuation_cone().contains(v))
      throw OutsideValuationCone("valuation " + to_string(v) + " is not in the valuation cone");
    gens.push_back(v);
  }
  ColoredCone cc(Cone::from_generators(gens, datum.dim()), datum.all_colors());
  const auto check = is_monoid_cone(datum, cc);
  if (const auto* bad = check.report.first_failure())
    throw AxiomViolation(bad->name, "cone " + to_string(datum, cc) + " is not a monoid cone: " + bad->detail);
  return cc;
}

MonoidKFormResult monoid_has_k_form(const SphericalDatum& datum, const GroupAction& action,
                                    const ColoredCone& cc, bool force_lp) {
  const auto check = is_monoid_cone(datum, cc);
  if (const auto* bad = check.report.first_failure())
    throw AxiomViolation(bad->name, "not a monoid cone: " + bad->detail);
  const ColoredFan simple = face_closure(datum, {cc});
  MonoidKFormResult out;
  out.verdict = is_fan_invariant(datum, action, simple);
  if (force_lp) out.lp_verdict = has_k_form(datum, action, simple).verdict;
  return out;
}

void check_morphism_data(const SphericalDatum& source, const SphericalDatum& target, const MorphismData& m) {
  if (m.matrix.cols() != source.dim() || m.matrix.rows() != target.dim())
    throw InputError("morphism matrix must be " + std::to_string(target.dim()) + "x" +
                     std::to_string(source.dim()));
  if (rank(m.matrix.row_list()) != target.dim()) throw InputError("morphism matrix is not surjective");

  for (std::size_t d : m.dominant_colors)
    if (d >= source.num_colors()) throw InputError("dominant color index out of range");
  for (std::size_t c = 0; c < source.num_colors(); ++c) {
    const bool dominant = m.dominant_colors.count(c) != 0;
    const bool mapped = m.color_map.count(c) != 0;
    if (dominant && mapped)
      throw InputError("color \"" + source.color_name(c) + "\" is dominant but also mapped");
    if (!dominant && !mapped)
      throw InputError("color \"" + source.color_name(c) + "\" is neither dominant nor mapped");
  }
  for (const auto& [from, to] : m.color_map) {
    if (from >= source.num_colors()) throw InputError("color map source index out of range");
    if (to >= target.num_colors()) throw InputError("color map target index out of range");
  }
  if (image(source.valuation_cone(), m.matrix) != target.valuation_cone())
    throw InputError("morphism does not map the valuation cone onto the target valuation cone");
}

MorphismCheck check_fan_morphism(const SphericalDatum& source, const SphericalDatum& target,
                                 const MorphismData& m, const ColoredFan& source_fan,
                                 const ColoredFan& target_fan) {
  check_morphism_data(source, target, m);
  for (const auto& cc : source_fan.cones) check_well_formed(source, cc);
  for (const auto& cc : target_fan.cones) check_well_formed(target, cc);

  MorphismCheck out;
  out.verdict = true;
  for (const auto& cc : source_fan.cones) {
    const Cone img = image(cc.cone, m.matrix);
    std::vector<std::size_t> mapped;
    for (std::size_t c : cc.colors)
      if (auto it = m.color_map.find(c); it != m.color_map.end()) mapped.push_back(it->second);

    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < target_fan.cones.size() && !hit; ++k) {
      const auto& tgt = target_fan.cones[k];
      if (!tgt.cone.contains(img)) continue;
      const bool colors_ok = std::all_of(mapped.begin(), mapped.end(), [&](std::size_t c) {
        return std::binary_search(tgt.colors.begin(), tgt.colors.end(), c);
      });
      if (colors_ok) hit = k;
    }
    if (!hit) out.verdict = false;
    out.assignment.push_back(hit);
  }
  return out;
}

bool lined_closure_real_form(const RatVec& lambda, const RatMat& theta) {
  if (!theta.is_square() || theta.rows() != lambda.size())
    throw DimensionError("theta must be a square matrix matching the weight length " +
                         std::to_string(lambda.size()));
  if (theta * theta != RatMat::identity(theta.rows()))
    throw NotAnInvolution("theta is not an involution");
  return theta.apply(lambda) == negate(lambda);
}

}  // namespace colfan
