#include "colfan/colfan.h"

#include "colfan/commands.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

struct colfan_datum {
  colfan::SphericalDatum value;
};

struct colfan_fan {
  std::shared_ptr<const colfan::SphericalDatum> datum;
  std::vector<colfan::ColoredCone> maximal;
};

struct colfan_action {
  std::vector<colfan::GroupElement> generators;
  colfan::GroupAction action;
};

struct colfan_report {
  colfan::cli::CommandReport value;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

colfan_status fail(colfan_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs f, mapping exceptions to status codes.
template <class F>
colfan_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const std::invalid_argument& e) {
    return fail(COLFAN_E_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(COLFAN_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

colfan_report* make_report(colfan::cli::CommandReport r) {
  auto* out = new colfan_report{std::move(r), {}, {}};
  out->text = out->value.text();
  out->json = out->value.json();
  return out;
}

std::optional<std::string> opt(const char* s) {
  if (!s) return std::nullopt;
  return std::string(s);
}

}  // namespace

extern "C" {

const char* colfan_version(void) { return "1.0.0"; }

const char* colfan_last_error(void) { return g_last_error.c_str(); }

void colfan_string_free(char* s) { std::free(s); }

colfan_status colfan_datum_parse(const char* json, colfan_datum** out) {
  if (!json || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new colfan_datum{colfan::io::parse_datum(json)};
    return COLFAN_OK;
  });
}

colfan_status colfan_datum_load(const char* path, colfan_datum** out) {
  if (!path || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new colfan_datum{colfan::io::parse_datum(colfan::io::read_file(path))};
    return COLFAN_OK;
  });
}

size_t colfan_datum_dim(const colfan_datum* datum) { return datum ? datum->value.dim() : 0; }

size_t colfan_datum_num_colors(const colfan_datum* datum) { return datum ? datum->value.num_colors() : 0; }

colfan_status colfan_datum_serialize(const colfan_datum* datum, char** out) {
  if (!datum || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(colfan::io::serialize_datum(datum->value));
    return COLFAN_OK;
  });
}

void colfan_datum_free(colfan_datum* datum) { delete datum; }

colfan_status colfan_fan_parse(const colfan_datum* datum, const char* json, colfan_fan** out) {
  if (!datum || !json || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto d = std::make_shared<const colfan::SphericalDatum>(datum->value);
    auto cones = colfan::io::parse_fan(json, *d);
    *out = new colfan_fan{std::move(d), std::move(cones)};
    return COLFAN_OK;
  });
}

colfan_status colfan_fan_load(const colfan_datum* datum, const char* path, colfan_fan** out) {
  if (!datum || !path || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = colfan::io::read_file(path);
    return colfan_fan_parse(datum, text.c_str(), out);
  });
}

size_t colfan_fan_num_cones(const colfan_fan* fan) { return fan ? fan->maximal.size() : 0; }

colfan_status colfan_fan_serialize(const colfan_fan* fan, char** out) {
  if (!fan || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(colfan::io::serialize_fan(*fan->datum, fan->maximal));
    return COLFAN_OK;
  });
}

void colfan_fan_free(colfan_fan* fan) { delete fan; }

colfan_status colfan_action_parse(const colfan_datum* datum, const char* json, colfan_action** out) {
  if (!datum || !json || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto gens = colfan::io::parse_action(json, datum->value);
    auto action = colfan::GroupAction::create(datum->value, gens);
    *out = new colfan_action{std::move(gens), std::move(action)};
    return COLFAN_OK;
  });
}

colfan_status colfan_action_load(const colfan_datum* datum, const char* path, colfan_action** out) {
  if (!datum || !path || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = colfan::io::read_file(path);
    return colfan_action_parse(datum, text.c_str(), out);
  });
}

size_t colfan_action_order(const colfan_action* action) { return action ? action->action.order() : 0; }

void colfan_action_free(colfan_action* action) { delete action; }

colfan_status colfan_check_validate(const colfan_datum* datum, const colfan_fan* fan, colfan_report** out) {
  if (!datum || !fan || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_report(colfan::cli::run_validate(datum->value, fan->maximal, nullptr));
    return COLFAN_OK;
  });
}

colfan_status colfan_check_quasiproj(const colfan_datum* datum, const colfan_fan* fan, colfan_report** out) {
  if (!datum || !fan || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_report(colfan::cli::run_quasiproj(datum->value, fan->maximal));
    return COLFAN_OK;
  });
}

colfan_status colfan_check_kform(const colfan_datum* datum, const colfan_fan* fan, const colfan_action* action,
                                 colfan_report** out) {
  if (!datum || !fan || !action || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_report(colfan::cli::run_kform(datum->value, fan->maximal, action->generators));
    return COLFAN_OK;
  });
}

colfan_status colfan_check_monoid(const colfan_datum* datum, const colfan_fan* fan, colfan_report** out) {
  if (!datum || !fan || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = make_report(colfan::cli::run_monoid(datum->value, fan->maximal));
    return COLFAN_OK;
  });
}

colfan_status colfan_run_command(const char* command, const colfan_inputs* inputs, colfan_report** out) {
  if (!command || !inputs || !out) return fail(COLFAN_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    colfan::cli::Inputs in;
    in.datum = opt(inputs->datum_path);
    in.fan = opt(inputs->fan_path);
    in.action = opt(inputs->action_path);
    in.morphism = opt(inputs->morphism_path);
    in.target_datum = opt(inputs->target_datum_path);
    in.target_fan = opt(inputs->target_fan_path);
    in.lambda = opt(inputs->lambda_csv);
    in.theta = opt(inputs->theta_path);
    in.force_lp = inputs->force_lp != 0;
    *out = make_report(colfan::cli::run_command(command, in));
    if ((*out)->value.error) return fail(COLFAN_E_INPUT, *(*out)->value.error);
    return COLFAN_OK;
  });
}

int colfan_report_verdict(const colfan_report* report) { return report && report->value.verdict ? 1 : 0; }

int colfan_report_exit_code(const colfan_report* report) {
  return report ? report->value.exit_code : colfan::cli::kInputError;
}

const char* colfan_report_text(const colfan_report* report) { return report ? report->text.c_str() : ""; }

const char* colfan_report_json(const colfan_report* report) { return report ? report->json.c_str() : ""; }

void colfan_report_free(colfan_report* report) { delete report; }

}  // extern "C"
