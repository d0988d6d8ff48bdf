#include "colfan/commands.hpp"

#include "json_writer.hpp"

#include <sstream>

namespace colfan::cli {

namespace {

void absorb(CommandReport& out, const ValidationReport& report, const std::string& prefix = {}) {
  for (const auto& a : report.axioms) {
    out.axioms.emplace_back(prefix + a.name, a.passed);
    if (!a.passed && !a.detail.empty()) out.reasons.push_back(prefix + a.name + ": " + a.detail);
  }
  for (const auto& n : report.notes) out.notes.push_back(n);
}

void finish(CommandReport& out, bool verdict) {
  out.verdict = verdict;
  out.exit_code = verdict ? kPass : kFail;
}

std::string cone_label(const SphericalDatum& datum, const ColoredFan& fan, std::size_t k) {
  return "cone[" + std::to_string(k) + "] " + to_string(datum, fan.cones[k]);
}

const ColoredCone& single_cone(const std::vector<ColoredCone>& cones) {
  if (cones.size() != 1)
    throw InputError("a monoid is described by exactly one colored cone; the fan file lists " +
                     std::to_string(cones.size()));
  return cones.front();
}

}  // namespace

CommandReport input_error_report(const std::string& command, const std::string& message) {
  CommandReport r;
  r.command = command;
  r.error = message;
  r.exit_code = kInputError;
  return r;
}

CommandReport run_validate(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal,
                           const std::vector<GroupElement>* action) {
  CommandReport out;
  out.command = "validate";
  out.notes.push_back(kColoredFaceConvention);

  bool cones_ok = true;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const auto r = validate_colored_cone(datum, maximal[i]);
    cones_ok = cones_ok && r.passed();
    absorb(out, r, "cone[" + std::to_string(i) + "].");
  }
  if (cones_ok) {
    const ColoredFan fan = face_closure(datum, maximal);
    const auto r = validate_colored_fan(datum, fan);
    for (const char* name : {"F1", "F2"}) {
      const auto* a = r.find(name);
      out.axioms.emplace_back(name, a->passed);
      if (!a->passed) out.reasons.push_back(std::string(name) + ": " + a->detail);
    }
    for (const auto& a : r.axioms)
      if (!a.passed && a.name != "F1" && a.name != "F2")
        out.reasons.push_back("face " + a.name + ": " + a.detail);
    cones_ok = r.passed();
  } else {
    out.reasons.push_back("F1/F2 not evaluated: some listed cone violates C1-C4");
  }

  bool action_ok = true;
  if (action) {
    const auto r = validate_action(datum, *action);
    action_ok = r.passed();
    absorb(out, r, "action.");
    if (const auto* order = r.find("order")) out.witnesses.push_back({"group order", {order->detail}});
  }
  finish(out, cones_ok && action_ok);
  return out;
}

CommandReport run_quasiproj(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal) {
  CommandReport out;
  out.command = "quasiproj";
  out.notes.push_back(kMaximalConeNote);
  const ColoredFan fan = face_closure(datum, maximal);
  const auto result = is_quasiprojective(datum, fan);
  out.axioms.emplace_back("quasiprojective", result.verdict);
  if (result.witness) {
    for (const auto& form : *result.witness) {
      Witness w{cone_label(datum, fan, form.cone_index), {}};
      for (const auto& x : form.coefficients) w.values.push_back(to_fraction_string(x));
      out.witnesses.push_back(std::move(w));
    }
  } else {
    out.reasons.push_back("no family of linear forms agrees on shared faces and strictly separates "
                          "the maximal cones on the valuation cone");
  }
  finish(out, result.verdict);
  return out;
}

CommandReport run_kform(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal,
                        const std::vector<GroupElement>& generators) {
  CommandReport out;
  out.command = "kform";
  const ColoredFan fan = face_closure(datum, maximal);
  const GroupAction action = GroupAction::create(datum, generators);
  const auto result = has_k_form(datum, action, fan);
  // The details already start with "(a)" or "(b)".
  for (const auto& a : result.report.axioms) {
    out.axioms.emplace_back(a.name, a.passed);
    if (!a.passed) out.reasons.push_back(a.detail);
  }
  for (const auto& n : result.report.notes) out.notes.push_back(n);
  out.witnesses.push_back({"group order", {std::to_string(action.order())}});
  finish(out, result.verdict);
  return out;
}

CommandReport run_monoid(const SphericalDatum& datum, const std::vector<ColoredCone>& cones) {
  CommandReport out;
  out.command = "monoid";
  const auto result = is_monoid_cone(datum, single_cone(cones));
  absorb(out, result.report);
  finish(out, result.verdict);
  return out;
}

CommandReport run_monoid_kform(const SphericalDatum& datum, const std::vector<ColoredCone>& cones,
                               const std::vector<GroupElement>& generators, bool force_lp) {
  CommandReport out;
  out.command = "monoid-kform";
  const GroupAction action = GroupAction::create(datum, generators);
  const auto result = monoid_has_k_form(datum, action, single_cone(cones), force_lp);
  out.axioms.emplace_back("invariant", result.verdict);
  if (!result.verdict) out.reasons.push_back("the colored cone is not stable under the action");
  if (result.lp_verdict) {
    const bool agree = *result.lp_verdict == result.verdict;
    out.axioms.emplace_back("lp cross-check agrees", agree);
    if (!agree) out.reasons.push_back("forced quasiprojectivity check disagrees with the invariance verdict");
  } else {
    out.notes.push_back("quasiprojectivity LP skipped: the fan of an affine embedding is always quasiprojective");
  }
  out.witnesses.push_back({"group order", {std::to_string(action.order())}});
  finish(out, result.verdict && (!result.lp_verdict || *result.lp_verdict == result.verdict));
  return out;
}

CommandReport run_morphism(const SphericalDatum& source, const std::vector<ColoredCone>& source_maximal,
                           const SphericalDatum& target, const std::vector<ColoredCone>& target_maximal,
                           const MorphismData& m) {
  CommandReport out;
  out.command = "morphism";
  const ColoredFan fan_y = face_closure(source, source_maximal);
  const ColoredFan fan_z = face_closure(target, target_maximal);
  require_valid_fan(source, fan_y);
  require_valid_fan(target, fan_z);
  const auto result = check_fan_morphism(source, target, m, fan_y, fan_z);
  out.axioms.emplace_back("every cone maps into a target cone", result.verdict);
  for (std::size_t i = 0; i < result.assignment.size(); ++i) {
    const auto& hit = result.assignment[i];
    if (hit) {
      out.witnesses.push_back({cone_label(source, fan_y, i), {cone_label(target, fan_z, *hit)}});
    } else {
      out.reasons.push_back(cone_label(source, fan_y, i) + " maps into no target cone");
    }
  }
  finish(out, result.verdict);
  return out;
}

CommandReport run_lined(const RatVec& lambda, const RatMat& theta) {
  CommandReport out;
  out.command = "lined";
  const bool ok = lined_closure_real_form(lambda, theta);
  out.axioms.emplace_back("theta lambda = -lambda", ok);
  if (!ok) out.reasons.push_back("theta * lambda = " + to_string(theta.apply(lambda)) + " differs from -lambda");
  out.notes.push_back("checks the supplied involution only; no search over automorphisms is made");
  finish(out, ok);
  return out;
}

namespace {

const std::string& require(const std::optional<std::string>& v, const char* option, const std::string& command) {
  if (!v) throw InputError("command " + command + " requires --" + option);
  return *v;
}

CommandReport dispatch(const std::string& command, const Inputs& in) {
  if (command == "lined")
    return run_lined(io::parse_csv_vector(require(in.lambda, "lambda", command)),
                     io::parse_matrix_file(io::read_file(require(in.theta, "theta", command))));

  const bool known = std::find(std::begin(kCommands), std::end(kCommands), command) != std::end(kCommands);
  if (!known) throw InputError("unknown command \"" + command + "\"");

  const SphericalDatum datum = io::parse_datum(io::read_file(require(in.datum, "datum", command)));
  const auto cones = io::parse_fan(io::read_file(require(in.fan, "fan", command)), datum);

  auto load_action = [&] { return io::parse_action(io::read_file(require(in.action, "action", command)), datum); };

  if (command == "validate") {
    if (in.action) {
      const auto gens = load_action();
      return run_validate(datum, cones, &gens);
    }
    return run_validate(datum, cones, nullptr);
  }
  if (command == "quasiproj") return run_quasiproj(datum, cones);
  if (command == "kform") return run_kform(datum, cones, load_action());
  if (command == "monoid") return run_monoid(datum, cones);
  if (command == "monoid-kform") return run_monoid_kform(datum, cones, load_action(), in.force_lp);

  // morphism
  const SphericalDatum target = io::parse_datum(io::read_file(require(in.target_datum, "target-datum", command)));
  const auto target_cones = io::parse_fan(io::read_file(require(in.target_fan, "target-fan", command)), target);
  const MorphismData m = io::parse_morphism(io::read_file(require(in.morphism, "morphism", command)), datum, target);
  return run_morphism(datum, cones, target, target_cones, m);
}

}  // namespace

CommandReport run_command(const std::string& command, const Inputs& inputs) {
  try {
    return dispatch(command, inputs);
  } catch (const std::invalid_argument& e) {
    // InputError, AxiomViolation, SchemaError and DimensionError all land here.
    return input_error_report(command, e.what());
  } catch (const std::exception& e) {
    return input_error_report(command, std::string("internal error: ") + e.what());
  }
}

std::string CommandReport::text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  if (error) {
    os << "error: " << *error << '\n';
    return os.str();
  }
  os << "verdict: " << (verdict ? "true" : "false") << '\n';
  if (!axioms.empty()) {
    os << "axioms:\n";
    for (const auto& [name, ok] : axioms) os << "  " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  }
  if (!witnesses.empty()) {
    os << "witnesses:\n";
    for (const auto& w : witnesses) {
      os << "  " << w.label << ":";
      for (const auto& v : w.values) os << ' ' << v;
      os << '\n';
    }
  }
  if (!reasons.empty()) {
    os << "reasons:\n";
    for (const auto& r : reasons) os << "  - " << r << '\n';
  }
  if (!notes.empty()) {
    os << "notes:\n";
    for (const auto& n : notes) os << "  - " << n << '\n';
  }
  return os.str();
}

std::string CommandReport::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (error) {
    j["error"] = *error;
    j["exit_code"] = exit_code;
    return io::write_json(j);
  }
  j["verdict"] = verdict;
  j["exit_code"] = exit_code;
  nlohmann::ordered_json ax = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : axioms) ax[name] = ok;
  j["axioms"] = ax;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : witnesses) {
    nlohmann::ordered_json e;
    e["label"] = w.label;
    e["values"] = w.values;
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  j["reasons"] = reasons;
  j["notes"] = notes;
  return io::write_json(j);
}

}  // namespace colfan::cli
