#include "support.hpp"

#include "colfan/quasiprojective.hpp"

#include <doctest.h>

#include <algorithm>

using namespace colfan;
using namespace colfan::testing;

namespace {

// Order 3 rotation of P2: (1,0) -> (0,1) -> (-1,-1).
GroupElement p2_rotation() { return GroupElement{mat({{0, -1}, {1, -1}}), {}}; }

// Cycles the outer and inner triangles of the twisted prism, fixing the axis.
GroupElement prism_rotation() { return GroupElement{mat({{-1, -1, 0}, {1, 0, 0}, {0, 0, 1}}), {}}; }

struct Case {
  SphericalDatum datum;
  std::vector<GroupElement> generators;
  std::vector<ColoredCone> maximal;
};

SphericalDatum conjugate(const SphericalDatum& d, const RatMat& g) {
  std::vector<Color> colors;
  for (const auto& c : d.colors()) colors.push_back({c.name, g.apply(c.rho)});
  return SphericalDatum(d.dim(), image(d.valuation_cone(), g), colors);
}

}  // namespace

TEST_CASE("validate_action") {
  SUBCASE("identity only") {
    const auto d = toric_datum(2);
    const auto r = validate_action(d, {});
    CHECK(r.passed());
    CHECK(GroupAction::trivial(d).order() == 1);
  }
  SUBCASE("swap is an involution") {
    const auto d = toric_datum(2);
    CHECK(validate_action(d, {swap2()}).passed());
    CHECK(GroupAction::create(d, {swap2()}).order() == 2);
  }
  SUBCASE("rank-one color swap") {
    const auto d = rank_one_datum();
    const GroupElement g{mat({{1}}), {1, 0}};
    CHECK(validate_action(d, {g}).passed());
    CHECK(GroupAction::create(d, {g}).order() == 2);
  }
  SUBCASE("non-invertible matrix is not a lattice automorphism") {
    const auto d = toric_datum(2);
    const GroupElement g{mat({{1, 0}, {0, 0}}), {}};
    const auto r = validate_action(d, {g});
    CHECK_FALSE(r.find("generator[0].lattice automorphism")->passed);
    try {
      GroupAction::create(d, {g});
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == "lattice automorphism");
      CHECK(std::string(e.what()).find("not a lattice automorphism") != std::string::npos);
    }
  }
  SUBCASE("rational inverse is rejected") {
    const GroupElement g{mat({{2, 0}, {0, 1}}), {}};
    CHECK_THROWS_AS(GroupAction::create(toric_datum(2), {g}), AxiomViolation);
  }
  SUBCASE("equivariance failure") {
    const SphericalDatum d(1, Cone::whole_space(1), {{"A", v({1})}, {"B", v({2})}});
    const GroupElement g{mat({{1}}), {1, 0}};
    CHECK_FALSE(validate_action(d, {g}).find("generator[0].equivariance")->passed);
  }
  SUBCASE("V not stable") {
    const SphericalDatum d(2, gen({{1, 0}, {0, 1}, {0, -1}}, 2), {});
    CHECK_FALSE(validate_action(d, {swap2()}).find("generator[0].V-stability")->passed);
  }
  SUBCASE("infinite order exceeds the cap") {
    const GroupElement g{mat({{1, 1}, {0, 1}}), {}};
    CHECK_THROWS_AS(GroupAction::create(toric_datum(2), {g}, 50), GroupCapExceeded);
  }
}

TEST_CASE("group closure is a group") {
  const auto d = toric_datum(2);
  const GroupElement rot{mat({{0, -1}, {1, 0}}), {}};
  const auto action = GroupAction::create(d, {rot, swap2()});
  const auto& el = action.elements();
  CHECK(el.size() == 8);
  CHECK(std::is_sorted(el.begin(), el.end()));
  CHECK(std::binary_search(el.begin(), el.end(), identity_element(d)));
  for (const auto& a : el)
    for (const auto& b : el) CHECK(std::binary_search(el.begin(), el.end(), a.compose(b)));
}

TEST_CASE("is_fan_invariant") {
  const auto d = toric_datum(2);
  const auto swap = GroupAction::create(d, {swap2()});
  CHECK(is_fan_invariant(d, swap, face_closure(d, p1xp1_maximal())));
  CHECK(is_fan_invariant(d, swap, face_closure(d, {colorless(gen({{1, 0}, {0, 1}}, 2))})));
  CHECK_FALSE(is_fan_invariant(d, swap, face_closure(d, {colorless(gen({{1, 0}}, 2))})));
}

TEST_CASE("orbit_subfan") {
  const auto d = toric_datum(2);
  const auto swap = GroupAction::create(d, {swap2()});
  const auto quad = colorless(gen({{1, 0}, {0, 1}}, 2));
  CHECK(orbit_subfan(d, GroupAction::trivial(d), quad).cones == face_closure(d, {quad}).cones);
  CHECK(orbit_subfan(d, swap, quad).cones == face_closure(d, {quad}).cones);
  const auto fan = orbit_subfan(d, swap, colorless(gen({{1, 0}, {1, 1}}, 2)));
  CHECK(fan.cones ==
        face_closure(d, {colorless(gen({{1, 0}, {1, 1}}, 2)), colorless(gen({{0, 1}, {1, 1}}, 2))}).cones);
  CHECK(maximal_members(d, fan).size() == 2);
  CHECK_THROWS_AS(orbit_subfan(d, swap, colorless(gen({{1, 0}, {1, 2}}, 2))), OrbitOverlap);
}

TEST_CASE("has_k_form") {
  const auto d = toric_datum(2);
  const auto swap = GroupAction::create(d, {swap2()});
  SUBCASE("P1 x P1 with swap") {
    const auto r = has_k_form(d, swap, face_closure(d, p1xp1_maximal()));
    CHECK(r.verdict);
    CHECK(r.invariant);
    CHECK(r.orbit_fans_quasiprojective);
    CHECK(r.report.notes.size() >= 2);
  }
  SUBCASE("single ray with swap fails (a)") {
    const auto r = has_k_form(d, swap, face_closure(d, {colorless(gen({{1, 0}}, 2))}));
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.invariant);
    const auto* a = r.report.find("(a) invariance");
    REQUIRE(a != nullptr);
    CHECK(a->detail.rfind("(a) fan not Γ-invariant, offending cone: ", 0) == 0);
  }
  SUBCASE("identity action: every simple subfan is quasiprojective") {
    const auto id = GroupAction::trivial(d);
    CHECK(has_k_form(d, id, face_closure(d, p2_maximal())).verdict);
    const auto d3 = toric_datum(3);
    const auto prism = face_closure(d3, twisted_prism_fan());
    CHECK_FALSE(is_quasiprojective(d3, prism).verdict);
    CHECK(has_k_form(d3, GroupAction::trivial(d3), prism).verdict);
  }
  SUBCASE("twisted prism with its order 3 rotation") {
    const auto d3 = toric_datum(3);
    const auto prism = face_closure(d3, twisted_prism_fan());
    const auto rot = GroupAction::create(d3, {prism_rotation()});
    CHECK(rot.order() == 3);
    CHECK(is_fan_invariant(d3, rot, prism));
    const auto r = has_k_form(d3, rot, prism);
    CHECK(r.invariant);
    // Each orbit fan is checked independently of the global LP; the FM
    // oracle decides the same question for every maximal member's orbit.
    bool oracle = true;
    for (std::size_t i : maximal_members(d3, prism)) {
      const auto sub = orbit_subfan(d3, rot, prism.cones[i]);
      oracle = oracle && fourier_motzkin(build_support_lp(d3, sub).problem, 16);
    }
    CHECK(r.orbit_fans_quasiprojective == oracle);
  }
  SUBCASE("invalid fan is an input error") {
    CHECK_THROWS_AS(has_k_form(d, swap, ColoredFan{p1xp1_maximal()}), AxiomViolation);
  }
}

TEST_CASE("property: has_k_form is conjugation covariant") {
  std::vector<Case> cases;
  cases.push_back({toric_datum(2), {swap2()}, p1xp1_maximal()});
  cases.push_back({toric_datum(2), {swap2()}, {colorless(gen({{1, 0}}, 2))}});
  cases.push_back({toric_datum(2), {p2_rotation()}, p2_maximal()});
  cases.push_back({toric_datum(2), {swap2()}, {colorless(gen({{1, 0}, {1, 1}}, 2))}});
  cases.push_back({rank_one_datum(), {GroupElement{mat({{1}}), {1, 0}}}, {colorless(gen({{-1}}, 1))}});

  std::mt19937 rng(2026);
  for (int t = 0; t < 20; ++t) {
    const Case& c = cases[t % cases.size()];
    const std::size_t n = c.datum.dim();
    const RatMat g = random_unimodular(rng, n);
    const RatMat gi = inverse(g);

    const auto base_action = GroupAction::create(c.datum, c.generators);
    const auto base_fan = face_closure(c.datum, c.maximal);
    const auto base = has_k_form(c.datum, base_action, base_fan);

    const SphericalDatum cd = conjugate(c.datum, g);
    std::vector<GroupElement> cg;
    for (const auto& h : c.generators) cg.push_back(GroupElement{g * h.matrix * gi, h.color_perm});
    std::vector<ColoredCone> cm;
    for (const auto& cc : c.maximal) cm.emplace_back(image(cc.cone, g), cc.colors);
    const auto conj_action = GroupAction::create(cd, cg);
    const auto conj_fan = face_closure(cd, cm);
    const auto conj = has_k_form(cd, conj_action, conj_fan);

    CHECK(conj_action.order() == base_action.order());
    CHECK(conj.verdict == base.verdict);
    CHECK(conj.invariant == base.invariant);
    CHECK(conj.orbit_fans_quasiprojective == base.orbit_fans_quasiprojective);
    CHECK(is_fan_invariant(cd, conj_action, conj_fan) == is_fan_invariant(c.datum, base_action, base_fan));
  }
}
