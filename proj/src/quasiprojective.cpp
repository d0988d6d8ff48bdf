#include "colfan/quasiprojective.hpp"

#include <stdexcept>

namespace colfan {

namespace {

// Coefficient row of <l_i - l_j, g> in the stacked variable vector.
RatVec difference_row(std::size_t i, std::size_t j, const RatVec& g, std::size_t num_forms) {
  const std::size_t n = g.size();
  RatVec row(n * num_forms);
  for (std::size_t k = 0; k < n; ++k) {
    row[i * n + k] += g[k];
    row[j * n + k] -= g[k];
  }
  return row;
}

}  // namespace

SupportLP build_support_lp(const SphericalDatum& datum, const ColoredFan& fan) {
  require_valid_fan(datum, fan);
  const std::size_t n = datum.dim();

  SupportLP out;
  out.maximal = maximal_members(datum, fan);
  const std::size_t m = out.maximal.size();
  out.problem.num_vars = n * m;

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Cone shared = intersect(fan.cones[out.maximal[a]].cone, fan.cones[out.maximal[b]].cone);
      for (const auto& g : shared.generators()) out.problem.add_equality(difference_row(a, b, g, m), 0);
    }

  std::vector<Cone> valuated;
  for (std::size_t a = 0; a < m; ++a)
    valuated.push_back(intersect(fan.cones[out.maximal[a]].cone, datum.valuation_cone()));

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      for (const auto& g : valuated[a].generators())
        out.problem.add_inequality(difference_row(a, b, g, m), 0);
      out.problem.add_inequality(difference_row(a, b, valuated[a].interior_point(), m), 1);
    }
  return out;
}

QuasiprojectivityResult is_quasiprojective(const SphericalDatum& datum, const ColoredFan& fan) {
  const auto lp = build_support_lp(datum, fan);
  const auto x = lp_feasible(lp.problem);
  if (!x) return {false, std::nullopt};
  if (!lp.problem.satisfied_by(*x))
    throw std::logic_error("simplex returned a point violating the support-form constraints");

  const std::size_t n = datum.dim();
  std::vector<SupportForm> forms;
  for (std::size_t a = 0; a < lp.maximal.size(); ++a) {
    SupportForm f;
    f.cone_index = lp.maximal[a];
    f.coefficients.assign(x->begin() + static_cast<std::ptrdiff_t>(a * n),
                          x->begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
    forms.push_back(std::move(f));
  }
  return {true, std::move(forms)};
}

}  // namespace colfan
