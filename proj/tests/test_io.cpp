#include "support.hpp"

#include "colfan/commands.hpp"
#include "colfan/io.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace colfan;
using namespace colfan::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(COLFAN_FIXTURES) + "/" + name; }
std::string load(const std::string& name) { return io::read_file(fixture(name)); }

cli::Inputs with(std::string datum, std::string fan) {
  cli::Inputs in;
  in.datum = fixture(datum);
  in.fan = fixture(fan);
  return in;
}

}  // namespace

TEST_CASE("datum files") {
  const auto d = io::parse_datum(load("toric1.json"));
  CHECK(d.dim() == 1);
  CHECK(d.num_colors() == 0);
  CHECK(d.valuation_cone() == Cone::whole_space(1));
  CHECK(load("toric1.json").find("[[1], [-1]]") != std::string::npos);

  const auto r1 = io::parse_datum(load("rank_one.json"));
  CHECK(r1.color_name(0) == "D+");
  CHECK(r1.rho(1) == v({1}));

  CHECK_THROWS_AS(io::parse_datum(load("malformed_datum.json")), io::SchemaError);
  CHECK_THROWS_AS(io::parse_datum(R"({"dim": 1, "valuation_cone": {"generators": [[0.5]]}, "colors": []})"),
                  io::SchemaError);
  CHECK_THROWS_AS(io::parse_datum(R"({"dim": 2, "valuation_cone": {"generators": [[1]]}, "colors": []})"),
                  io::SchemaError);
  CHECK_THROWS_AS(io::parse_datum(R"({"dim": 1, "colors": []})"), io::SchemaError);
  CHECK_THROWS_AS(
      io::parse_datum(R"({"dim": 1, "valuation_cone": {"generators": []}, "colors": [{"name": "A", "rho": [1]}, {"name": "A", "rho": [1]}]})"),
      InputError);
}

TEST_CASE("fan files") {
  const auto d = io::parse_datum(load("toric1.json"));
  const auto cones = io::parse_fan(load("p1_fan.json"), d);
  CHECK(cones.size() == 2);
  CHECK(face_closure(d, cones).cones.size() == 3);

  const auto r1 = io::parse_datum(load("rank_one.json"));
  try {
    io::parse_fan(load("unknown_color_fan.json"), r1);
    FAIL("expected a schema error");
  } catch (const io::SchemaError& e) {
    CHECK(std::string(e.what()).find("\"D9\"") != std::string::npos);
  }
}

TEST_CASE("action files") {
  const auto d = io::parse_datum(load("toric2.json"));
  const auto gens = io::parse_action(load("singular_action.json"), d);
  try {
    GroupAction::create(d, gens);
    FAIL("expected an axiom violation");
  } catch (const AxiomViolation& e) {
    CHECK(std::string(e.what()).find("not a lattice automorphism") != std::string::npos);
  }
  const auto r1 = io::parse_datum(load("rank_one.json"));
  const auto swap = io::parse_action(load("rank_one_swap_action.json"), r1);
  REQUIRE(swap.size() == 1);
  CHECK(swap[0].color_perm == std::vector<std::size_t>{1, 0});
}

TEST_CASE("matrix and vector inputs") {
  CHECK(io::parse_matrix_file(load("theta_neg1.json")) == mat({{-1}}));
  CHECK(io::parse_csv_vector("1,-2, 3") == v({1, -2, 3}));
  CHECK_THROWS_AS(io::parse_csv_vector("1,x"), InputError);
  CHECK_THROWS_AS(io::parse_csv_vector(""), InputError);
}

TEST_CASE("serialize(parse(f)) is byte-identical") {
  const auto t1 = io::parse_datum(load("toric1.json"));
  const auto t2 = io::parse_datum(load("toric2.json"));
  const auto t3 = io::parse_datum(load("toric3.json"));
  const auto r1 = io::parse_datum(load("rank_one.json"));
  for (const char* f : {"toric1.json", "toric2.json", "toric3.json", "rank_one.json"})
    CHECK(io::serialize_datum(io::parse_datum(load(f))) == load(f));
  const std::vector<std::pair<const char*, const SphericalDatum*>> fans{
      {"p1_fan.json", &t1},          {"half_ray_fan.json", &t1},    {"line_fan.json", &t1},
      {"p2_fan.json", &t2},          {"p1xp1_fan.json", &t2},       {"ray_fan.json", &t2},
      {"quadrant_fan.json", &t2},    {"neg_quadrant_fan.json", &t2}, {"twisted_prism_fan.json", &t3},
      {"rank_one_fan.json", &r1},    {"rank_one_forward_fan.json", &r1}};
  for (const auto& [f, d] : fans) {
    INFO(f);
    CHECK(io::serialize_fan(*d, io::parse_fan(load(f), *d)) == load(f));
  }
  for (const char* f : {"swap_action.json", "identity_action.json", "singular_action.json"})
    CHECK(io::serialize_action(t2, io::parse_action(load(f), t2)) == load(f));
  CHECK(io::serialize_action(r1, io::parse_action(load("rank_one_swap_action.json"), r1)) ==
        load("rank_one_swap_action.json"));
  CHECK(io::serialize_morphism(t2, t1, io::parse_morphism(load("projection_morphism.json"), t2, t1)) ==
        load("projection_morphism.json"));
}

TEST_CASE("property: random fans round-trip through text") {
  std::mt19937 rng(8);
  const auto d = toric_datum(2);
  for (int t = 0; t < 20; ++t) {
    const auto maximal = sectors(random_complete_2d_rays(rng));
    const std::string text = io::serialize_fan(d, maximal);
    const auto back = io::parse_fan(text, d);
    CHECK(back == maximal);
    CHECK(io::serialize_fan(d, back) == text);
  }
}

TEST_CASE("run_command exit codes") {
  SUBCASE("quasiproj on P2 prints an exact witness") {
    const auto r = cli::run_command("quasiproj", with("toric2.json", "p2_fan.json"));
    CHECK(r.exit_code == cli::kPass);
    REQUIRE(r.witnesses.size() == 3);
    for (const auto& w : r.witnesses)
      for (const auto& x : w.values) CHECK(x.find('/') != std::string::npos);
  }
  SUBCASE("kform on the ray fan with swap") {
    auto in = with("toric2.json", "ray_fan.json");
    in.action = fixture("swap_action.json");
    const auto r = cli::run_command("kform", in);
    CHECK(r.exit_code == cli::kFail);
    REQUIRE_FALSE(r.reasons.empty());
    CHECK(r.reasons.front().find("(a) fan not Γ-invariant, offending cone: ") != std::string::npos);
  }
  SUBCASE("kform on P1 x P1 with swap") {
    auto in = with("toric2.json", "p1xp1_fan.json");
    in.action = fixture("swap_action.json");
    CHECK(cli::run_command("kform", in).exit_code == cli::kPass);
  }
  SUBCASE("lined") {
    cli::Inputs in;
    in.lambda = "1";
    in.theta = fixture("theta_neg1.json");
    CHECK(cli::run_command("lined", in).exit_code == cli::kPass);
    in.theta = fixture("theta_id1.json");
    CHECK(cli::run_command("lined", in).exit_code == cli::kFail);
  }
  SUBCASE("validate") {
    CHECK(cli::run_command("validate", with("toric1.json", "p1_fan.json")).exit_code == cli::kPass);
    CHECK(cli::run_command("validate", with("rank_one.json", "rank_one_forward_fan.json")).exit_code ==
          cli::kFail);
  }
  SUBCASE("monoid") {
    CHECK(cli::run_command("monoid", with("toric2.json", "neg_quadrant_fan.json")).exit_code == cli::kPass);
    CHECK(cli::run_command("monoid", with("toric1.json", "line_fan.json")).exit_code == cli::kFail);
    CHECK(cli::run_command("monoid", with("rank_one.json", "rank_one_forward_fan.json")).exit_code ==
          cli::kFail);
    CHECK(cli::run_command("monoid", with("toric2.json", "p2_fan.json")).exit_code == cli::kInputError);
  }
  SUBCASE("monoid-kform") {
    auto in = with("toric2.json", "neg_quadrant_fan.json");
    in.action = fixture("swap_action.json");
    in.force_lp = true;
    CHECK(cli::run_command("monoid-kform", in).exit_code == cli::kPass);
  }
  SUBCASE("morphism") {
    auto in = with("toric2.json", "quadrant_fan.json");
    in.target_datum = fixture("toric1.json");
    in.target_fan = fixture("half_ray_fan.json");
    in.morphism = fixture("projection_morphism.json");
    CHECK(cli::run_command("morphism", in).exit_code == cli::kPass);
    in.target_fan = fixture("line_fan.json");  // not strictly convex: input error
    CHECK(cli::run_command("morphism", in).exit_code == cli::kInputError);
  }
  SUBCASE("input errors") {
    CHECK(cli::run_command("quasiproj", cli::Inputs{}).exit_code == cli::kInputError);
    CHECK(cli::run_command("frobnicate", with("toric2.json", "p2_fan.json")).exit_code == cli::kInputError);
    auto in = with("toric2.json", "p1xp1_fan.json");
    in.action = fixture("singular_action.json");
    const auto r = cli::run_command("kform", in);
    CHECK(r.exit_code == cli::kInputError);
    CHECK(r.error->find("not a lattice automorphism") != std::string::npos);
    CHECK(cli::run_command("quasiproj", with("rank_one.json", "unknown_color_fan.json")).exit_code ==
          cli::kInputError);
    CHECK(cli::run_command("quasiproj", with("toric2.json", "nonexistent.json")).exit_code == cli::kInputError);
  }
}

TEST_CASE("reports are deterministic") {
  auto in = with("toric2.json", "p1xp1_fan.json");
  in.action = fixture("swap_action.json");
  const auto a = cli::run_command("kform", in), b = cli::run_command("kform", in);
  CHECK(a.text() == b.text());
  CHECK(a.json() == b.json());
  const auto j = nlohmann::json::parse(a.json());
  CHECK(j["command"] == "kform");
  CHECK(j["verdict"] == true);
  CHECK(j["axioms"]["(a) invariance"] == true);
  CHECK(j.contains("witnesses"));
  CHECK(j.contains("reasons"));
}
