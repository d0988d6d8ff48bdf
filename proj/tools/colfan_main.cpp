// colfan: command-line front end over the C API.

#include "colfan/colfan.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for colored fans, k-forms and reductive monoid cones"};
  app.set_version_flag("--version", std::string(colfan_version()));
  app.require_subcommand(1);

  std::string datum, fan, action, morphism, target_datum, target_fan, lambda, theta;
  bool json = false;
  bool force_lp = false;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "check axioms C1-C4 on every cone and F1/F2 on the fan"},
      {"quasiproj", "decide quasiprojectivity and print the support forms"},
      {"kform", "decide existence of a k-form under a finite Galois action"},
      {"monoid", "check that a single colored cone classifies a reductive monoid"},
      {"monoid-kform", "decide existence of a k-form of a reductive monoid"},
      {"morphism", "check that a linear map induces a morphism of colored fans"},
      {"lined", "check the real-form condition theta(lambda) = -lambda for a lined closure"},
  };

  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--datum", datum, "spherical datum file (JSON)");
    sub->add_option("--fan", fan, "fan file listing maximal colored cones (JSON)");
    sub->add_option("--action", action, "group action file (JSON)");
    sub->add_option("--morphism", morphism, "morphism file (JSON)");
    sub->add_option("--target-datum", target_datum, "target spherical datum for morphism");
    sub->add_option("--target-fan", target_fan, "target fan for morphism");
    sub->add_option("--lambda", lambda, "weight as comma-separated integers, e.g. --lambda=-1,2");
    sub->add_option("--theta", theta, "involution matrix file (JSON {\"matrix\": ...})");
    sub->add_flag("--force-lp", force_lp, "monoid-kform: also run the quasiprojectivity LP");
    sub->add_flag("--json", json, "print the structured report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto c_str = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
  colfan_inputs in{c_str(datum),        c_str(fan),       c_str(action), c_str(morphism),
                   c_str(target_datum), c_str(target_fan), c_str(lambda), c_str(theta),
                   force_lp ? 1 : 0};

  colfan_report* report = nullptr;
  const colfan_status status = colfan_run_command(command.c_str(), &in, &report);
  if (!report) {
    std::fprintf(stderr, "colfan: %s\n", colfan_last_error());
    return 2;
  }
  const int code = colfan_report_exit_code(report);
  if (json) {
    std::fputs(colfan_report_json(report), stdout);
  } else if (status != COLFAN_OK) {
    std::fprintf(stderr, "colfan %s: %s\n", command.c_str(), colfan_last_error());
  } else {
    std::fputs(colfan_report_text(report), stdout);
  }
  colfan_report_free(report);
  return code;
}
