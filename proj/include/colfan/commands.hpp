#pragma once

// Command layer shared by the C API and the CLI.

#include "colfan/io.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace colfan::cli {

/// Exit codes: the check passed, the check failed, or the input was bad.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct Inputs {
  std::optional<std::string> datum;
  std::optional<std::string> fan;
  std::optional<std::string> action;
  std::optional<std::string> morphism;
  std::optional<std::string> target_datum;
  std::optional<std::string> target_fan;
  std::optional<std::string> lambda;  // comma-separated integers
  std::optional<std::string> theta;
  bool force_lp = false;
};

struct Witness {
  std::string label;
  std::vector<std::string> values;
};

/// Deterministic report: {command, verdict, axioms, witnesses, reasons, notes}.
struct CommandReport {
  std::string command;
  bool verdict = false;
  std::vector<std::pair<std::string, bool>> axioms;
  std::vector<Witness> witnesses;
  std::vector<std::string> reasons;
  std::vector<std::string> notes;
  std::optional<std::string> error;  // set for input errors
  int exit_code = kInputError;

  std::string text() const;
  std::string json() const;
};

inline constexpr const char* kCommands[] = {"validate", "quasiproj", "kform", "monoid",
                                            "monoid-kform", "morphism", "lined"};

/// Never throws: input errors become a report with exit code 2.
CommandReport run_command(const std::string& command, const Inputs& inputs);

// Entry points over already-parsed inputs. These throw InputError (and its
// subclasses) for bad input; run_command converts those to exit code 2.
CommandReport run_validate(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal,
                           const std::vector<GroupElement>* action);
CommandReport run_quasiproj(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal);
CommandReport run_kform(const SphericalDatum& datum, const std::vector<ColoredCone>& maximal,
                        const std::vector<GroupElement>& generators);
CommandReport run_monoid(const SphericalDatum& datum, const std::vector<ColoredCone>& cones);
CommandReport run_monoid_kform(const SphericalDatum& datum, const std::vector<ColoredCone>& cones,
                               const std::vector<GroupElement>& generators, bool force_lp);
CommandReport run_morphism(const SphericalDatum& source, const std::vector<ColoredCone>& source_maximal,
                           const SphericalDatum& target, const std::vector<ColoredCone>& target_maximal,
                           const MorphismData& m);
CommandReport run_lined(const RatVec& lambda, const RatMat& theta);

CommandReport input_error_report(const std::string& command, const std::string& message);

}  // namespace colfan::cli
