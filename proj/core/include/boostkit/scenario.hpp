#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boostkit/linalg.hpp"

// Scenario-driven front end: parse a JSON scenario file, dispatch to the
// owning module, and emit a deterministic machine-readable report.
namespace boostkit::scenario {

/// Scenario file is malformed or semantically invalid (exit code 2).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResultEntry {
  std::string name;
  cplx value;
};

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> scenario_echo;  // ordered
  std::vector<ResultEntry> results;
  std::vector<ResidualEntry> residuals;

  bool pass() const;
};

/// Deterministic JSON serialization: fixed field order, floats formatted at
/// 17 significant digits, complex values as {"re": ..., "im": ...}.
std::string report_to_json(const Report& report);

struct RunOutcome {
  Report report;
  int exit_code = 0;     // 0 pass, 1 fail/computation error, 2 invalid scenario
  std::string error;     // diagnostic when exit_code != 0 and no report
};

/// Runs one scenario file; writes the JSON report (and any CSV spectra) to the
/// paths named inside the scenario, atomically (write-then-rename).
RunOutcome run_scenario(const std::string& path);

/// Runs every *.json scenario in the directory in filename order; prints one
/// summary line per scenario. Aggregate exit code is the worst of individual
/// codes; an empty directory passes with a warning.
RunOutcome run_all(const std::string& directory, std::ostream& summary);

/// The built-in gamma/spin-tensor algebra suite (`check` subcommand).
Report builtin_algebra_check(std::uint64_t seed, int covariance_samples = 100);

/// Reads BOOSTKIT_SEED (decimal) or returns the fixed default.
std::uint64_t seed_from_env();

}  // namespace boostkit::scenario
