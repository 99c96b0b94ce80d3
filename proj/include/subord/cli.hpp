#pragma once

// Command-line front end: verify, threshold, falsify, plot.
//
// Exit codes: 0 success, 1 verification failed, 2 invalid configuration,
// 3 I/O failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subord/report.hpp"

namespace subord {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInvalid = 2, kExitIo = 3 };

struct RunConfig {
  std::string command;
  std::string lemma;
  // Comma lists; only `threshold` may sweep more than one value.
  std::vector<double> A{1.0};
  std::vector<double> B{0.0};
  std::vector<double> D{1.0};
  std::vector<double> E{0.0};
  std::vector<double> k{0.0};
  std::optional<double> beta;
  std::optional<double> beta_factor;
  std::size_t grid = kDefaultMarginGrid;
  std::size_t adm_grid = kDefaultAdmissibilityGrid;
  std::size_t order = kDefaultOrder;
  std::size_t trials = 50;
  std::vector<double> radii{kDefaultRadii.begin(), kDefaultRadii.end()};
  std::uint64_t seed = 0;
  double tol = kTolerances.verdict;
  std::string schwarz = "random";
  std::string json_path;
  std::string csv_path;
  std::string svg_path;
};

/// Every problem with the configuration, empty when it is runnable.
std::vector<std::string> validate(const RunConfig& cfg);

/// Parameter combinations in sweep order (A, B, D, E, k outermost first).
std::vector<LemmaParams> expand_sweep(const RunConfig& cfg);

/// Config echo stored in reports (output paths excluded).
Json config_json(const RunConfig& cfg);

/// Runs a validated config; `doc` receives the report for the command.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                ReportDocument* doc = nullptr);

/// Full entry point: parse, validate, run.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subord
