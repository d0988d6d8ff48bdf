#include "support.hpp"

#include "colfan/quasiprojective.hpp"

#include <doctest.h>

using namespace colfan;
using namespace colfan::testing;

namespace {

void check_witness(const SphericalDatum& d, const ColoredFan& fan, const QuasiprojectivityResult& r) {
  REQUIRE(r.witness.has_value());
  const auto lp = build_support_lp(d, fan);
  RatVec x;
  for (const auto& f : *r.witness) x.insert(x.end(), f.coefficients.begin(), f.coefficients.end());
  CHECK(lp.problem.satisfied_by(x));
}

}  // namespace

TEST_CASE("build_support_lp") {
  SUBCASE("single maximal cone: n variables, no constraints") {
    const auto d = toric_datum(2);
    const auto fan = face_closure(d, {colorless(gen({{1, 0}, {0, 1}}, 2))});
    const auto lp = build_support_lp(d, fan);
    CHECK(lp.problem.num_vars == 2);
    CHECK(lp.problem.equalities.empty());
    CHECK(lp.problem.inequalities.empty());
  }
  SUBCASE("P1: two separation rows") {
    const auto d = toric_datum(1);
    const auto fan = face_closure(d, p1_maximal());
    const auto lp = build_support_lp(d, fan);
    REQUIRE(lp.problem.num_vars == 2);
    CHECK(lp.problem.equalities.empty());
    // Maximal members in fan order: cone<(-1)> owns x0, cone<(1)> owns x1.
    REQUIRE(lp.maximal.size() == 2);
    CHECK(fan.cones[lp.maximal[0]].cone == gen({{-1}}, 1));
    std::vector<LinearConstraint> strict;
    for (const auto& c : lp.problem.inequalities)
      if (c.rhs == 1) strict.push_back(c);
    REQUIRE(strict.size() == 2);
    // l_+(1) - l_-(1) >= 1 and l_-(-1) - l_+(-1) >= 1 both read x1 - x0 >= 1.
    CHECK(strict[0].coeffs == v({-1, 1}));
    CHECK(strict[1].coeffs == v({-1, 1}));
  }
  SUBCASE("P2: 6 variables, 3 agreement rows, 6 separation blocks") {
    const auto d = toric_datum(2);
    const auto fan = face_closure(d, p2_maximal());
    const auto lp = build_support_lp(d, fan);
    CHECK(lp.problem.num_vars == 6);
    CHECK(lp.problem.equalities.size() == 3);
    std::size_t strict = 0;
    for (const auto& c : lp.problem.inequalities) strict += c.rhs == 1;
    CHECK(strict == 6);
  }
  SUBCASE("invalid fan is refused") {
    const auto d = toric_datum(1);
    CHECK_THROWS_AS(build_support_lp(d, ColoredFan{p1_maximal()}), AxiomViolation);
  }
}

TEST_CASE("is_quasiprojective ground truths") {
  const auto d = toric_datum(2);
  SUBCASE("P2 accepted with pairwise distinct forms") {
    const auto fan = face_closure(d, p2_maximal());
    const auto r = is_quasiprojective(d, fan);
    CHECK(r.verdict);
    check_witness(d, fan, r);
    REQUIRE(r.witness->size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) CHECK((*r.witness)[i].coefficients != (*r.witness)[j].coefficients);
    CHECK(fourier_motzkin(build_support_lp(d, fan).problem));
  }
  SUBCASE("single maximal cone accepted with one form") {
    const auto fan = face_closure(d, {colorless(gen({{1, 0}, {1, 3}}, 2))});
    const auto r = is_quasiprojective(d, fan);
    CHECK(r.verdict);
    check_witness(d, fan, r);
  }
  SUBCASE("colored single cone in the rank-one fixture") {
    const auto r1 = rank_one_datum();
    const auto fan = face_closure(r1, {colorless(gen({{-1}}, 1))});
    CHECK(is_quasiprojective(r1, fan).verdict);
  }
  SUBCASE("P1 x P1 accepted") {
    const auto fan = face_closure(d, p1xp1_maximal());
    const auto r = is_quasiprojective(d, fan);
    CHECK(r.verdict);
    check_witness(d, fan, r);
  }
  SUBCASE("non-complete fan with V a half-plane") {
    const SphericalDatum hv(2, gen({{1, 0}, {-1, 0}, {0, -1}}, 2), {});
    const auto fan =
        face_closure(hv, {colorless(gen({{1, 0}, {0, -1}}, 2)), colorless(gen({{0, -1}, {-1, 0}}, 2))});
    const auto r = is_quasiprojective(hv, fan);
    CHECK(r.verdict);
    check_witness(hv, fan, r);
  }
}

TEST_CASE("property: random complete 2-d fans are quasiprojective") {
  std::mt19937 rng(99);
  const auto d = toric_datum(2);
  for (int t = 0; t < 15; ++t) {
    const auto fan = face_closure(d, sectors(random_complete_2d_rays(rng)));
    const auto r = is_quasiprojective(d, fan);
    CHECK(r.verdict);
    check_witness(d, fan, r);
    CHECK(fourier_motzkin(build_support_lp(d, fan).problem, 16));
  }
}

TEST_CASE("twisted prism fan is rejected") {
  const auto d = toric_datum(3);
  const auto fan = face_closure(d, twisted_prism_fan());
  REQUIRE(validate_colored_fan(d, fan).passed());
  CHECK(maximal_members(d, fan).size() == 10);
  const auto r = is_quasiprojective(d, fan);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("twisted prism infeasibility is certified by Fourier-Motzkin") {
  const auto d = toric_datum(3);
  const auto lp = build_support_lp(d, face_closure(d, twisted_prism_fan())).problem;
  CHECK_FALSE(fourier_motzkin(lp));
}
