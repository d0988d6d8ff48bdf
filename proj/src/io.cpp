#include "colfan/io.hpp"

#include "json_writer.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace colfan::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) throw SchemaError(ctx + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(ctx + ": missing field \"" + key + "\"");
  return *it;
}

const json& array_field(const json& obj, const char* key, const std::string& ctx) {
  const json& v = field(obj, key, ctx);
  if (!v.is_array()) throw SchemaError(ctx + ": field \"" + key + "\" must be an array");
  return v;
}

Rational integer_entry(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  throw SchemaError(ctx + ": entries must be integers, got " + v.dump());
}

RatVec int_vector(const json& v, std::size_t len, const std::string& ctx) {
  if (!v.is_array()) throw SchemaError(ctx + ": expected an integer vector");
  if (v.size() != len)
    throw SchemaError(ctx + ": vector " + v.dump() + " has length " + std::to_string(v.size()) +
                      ", expected " + std::to_string(len));
  RatVec out;
  for (const auto& x : v) out.push_back(integer_entry(x, ctx));
  return out;
}

RatMat int_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& ctx) {
  if (!v.is_array() || v.size() != rows)
    throw SchemaError(ctx + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " integer matrix");
  std::vector<RatVec> out;
  for (const auto& r : v) out.push_back(int_vector(r, cols, ctx));
  return rows == 0 ? RatMat(0, cols) : RatMat(std::move(out));
}

std::size_t resolve_color(const SphericalDatum& datum, const json& name, const std::string& ctx) {
  if (!name.is_string()) throw SchemaError(ctx + ": color names must be strings");
  const auto s = name.get<std::string>();
  if (auto i = datum.find_color(s)) return *i;
  throw SchemaError(ctx + ": unknown color \"" + s + "\"");
}

ordered_json vector_json(const RatVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) {
    if (x.get_den() != 1) throw std::logic_error("non-integer vector in serialization");
    const mpz_class& num = x.get_num();
    if (num.fits_slong_p())
      a.push_back(num.get_si());
    else
      throw std::overflow_error("integer entry too large to serialize");
  }
  return a;
}

ordered_json matrix_json(const RatMat& m) {
  ordered_json a = ordered_json::array();
  for (const auto& r : m.row_list()) a.push_back(vector_json(r));
  return a;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SphericalDatum parse_datum(std::string_view text) {
  const json j = parse_json(text, "datum");
  const std::string ctx = "datum";
  const json& dim_v = field(j, "dim", ctx);
  if (!dim_v.is_number_unsigned()) throw SchemaError("datum: \"dim\" must be a nonnegative integer");
  const auto dim = dim_v.get<std::size_t>();

  const json& vc = field(j, "valuation_cone", ctx);
  std::vector<RatVec> gens;
  for (const auto& g : array_field(vc, "generators", "datum.valuation_cone"))
    gens.push_back(int_vector(g, dim, "datum.valuation_cone.generators"));

  std::vector<Color> colors;
  for (const auto& c : array_field(j, "colors", ctx)) {
    const json& name = field(c, "name", "datum.colors");
    if (!name.is_string()) throw SchemaError("datum.colors: \"name\" must be a string");
    colors.push_back({name.get<std::string>(), int_vector(field(c, "rho", "datum.colors"), dim, "datum.colors.rho")});
  }
  try {
    return SphericalDatum(dim, Cone::from_generators(gens, dim), std::move(colors));
  } catch (const InputError& e) {
    throw SchemaError(std::string("datum: ") + e.what());
  }
}

std::string serialize_datum(const SphericalDatum& datum) {
  ordered_json j;
  j["dim"] = datum.dim();
  ordered_json gens = ordered_json::array();
  for (const auto& g : datum.valuation_cone().generators()) gens.push_back(vector_json(g));
  j["valuation_cone"]["generators"] = gens;
  ordered_json colors = ordered_json::array();
  for (const auto& c : datum.colors()) {
    ordered_json e;
    e["name"] = c.name;
    e["rho"] = vector_json(c.rho);
    colors.push_back(e);
  }
  j["colors"] = colors;
  return write_json(j);
}

std::vector<ColoredCone> parse_fan(std::string_view text, const SphericalDatum& datum) {
  const json j = parse_json(text, "fan");
  std::vector<ColoredCone> out;
  for (const auto& c : array_field(j, "cones", "fan")) {
    std::vector<RatVec> rays;
    for (const auto& r : array_field(c, "rays", "fan.cones")) rays.push_back(int_vector(r, datum.dim(), "fan.cones.rays"));
    std::vector<std::size_t> colors;
    for (const auto& name : array_field(c, "colors", "fan.cones")) colors.push_back(resolve_color(datum, name, "fan.cones.colors"));
    out.emplace_back(Cone::from_generators(rays, datum.dim()), std::move(colors));
  }
  return out;
}

std::string serialize_fan(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal) {
  ordered_json cones = ordered_json::array();
  for (const auto& cc : maximal) {
    ordered_json e;
    ordered_json rays = ordered_json::array();
    for (const auto& g : cc.cone.generators()) rays.push_back(vector_json(g));
    e["rays"] = rays;
    ordered_json colors = ordered_json::array();
    for (std::size_t c : cc.colors) colors.push_back(datum.color_name(c));
    e["colors"] = colors;
    cones.push_back(e);
  }
  ordered_json j;
  j["cones"] = cones;
  return write_json(j);
}

std::vector<GroupElement> parse_action(std::string_view text, const SphericalDatum& datum) {
  const json j = parse_json(text, "action");
  std::vector<GroupElement> out;
  for (const auto& g : array_field(j, "generators", "action")) {
    GroupElement e;
    e.matrix = int_matrix(field(g, "matrix", "action.generators"), datum.dim(), datum.dim(), "action.generators.matrix");
    e.color_perm = datum.all_colors();
    const json& perm = field(g, "color_perm", "action.generators");
    if (!perm.is_object()) throw SchemaError("action.generators.color_perm: expected an object name -> name");
    for (const auto& [from, to] : perm.items()) {
      const std::size_t src = resolve_color(datum, json(from), "action.generators.color_perm");
      e.color_perm[src] = resolve_color(datum, to, "action.generators.color_perm");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string serialize_action(const SphericalDatum& datum, const std::vector<GroupElement>& generators) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : generators) {
    ordered_json e;
    e["matrix"] = matrix_json(g.matrix);
    ordered_json perm = ordered_json::object();
    for (std::size_t c = 0; c < datum.num_colors(); ++c) perm[datum.color_name(c)] = datum.color_name(g.color_perm[c]);
    e["color_perm"] = perm;
    gens.push_back(e);
  }
  ordered_json j;
  j["generators"] = gens;
  return write_json(j);
}

MorphismData parse_morphism(std::string_view text, const SphericalDatum& source, const SphericalDatum& target) {
  const json j = parse_json(text, "morphism");
  MorphismData m;
  m.matrix = int_matrix(field(j, "matrix", "morphism"), target.dim(), source.dim(), "morphism.matrix");
  const json& cmap = field(j, "color_map", "morphism");
  if (!cmap.is_object()) throw SchemaError("morphism.color_map: expected an object name -> name");
  for (const auto& [from, to] : cmap.items())
    m.color_map[resolve_color(source, json(from), "morphism.color_map")] =
        resolve_color(target, to, "morphism.color_map (target)");
  for (const auto& d : array_field(j, "dominant_colors", "morphism"))
    m.dominant_colors.insert(resolve_color(source, d, "morphism.dominant_colors"));
  return m;
}

std::string serialize_morphism(const SphericalDatum& source, const SphericalDatum& target, const MorphismData& m) {
  ordered_json j;
  j["matrix"] = matrix_json(m.matrix);
  ordered_json cmap = ordered_json::object();
  for (const auto& [from, to] : m.color_map) cmap[source.color_name(from)] = target.color_name(to);
  j["color_map"] = cmap;
  ordered_json dom = ordered_json::array();
  for (std::size_t d : m.dominant_colors) dom.push_back(source.color_name(d));
  j["dominant_colors"] = dom;
  return write_json(j);
}

RatMat parse_matrix_file(std::string_view text) {
  const json j = parse_json(text, "matrix");
  const json& rows = array_field(j, "matrix", "matrix file");
  if (rows.empty()) throw SchemaError("matrix file: matrix is empty");
  if (!rows.front().is_array()) throw SchemaError("matrix file: rows must be arrays");
  return int_matrix(rows, rows.size(), rows.front().size(), "matrix file");
}

RatVec parse_csv_vector(std::string_view csv) {
  RatVec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t end = std::min(csv.find(',', start), csv.size());
    std::string_view tok = csv.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw SchemaError("expected a comma-separated list of integers, got \"" + std::string(csv) + "\"");
    out.emplace_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace colfan::io
