#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "boostkit/scenario.hpp"

namespace {

void print_report(const boostkit::scenario::Report& r) {
  std::cout << boostkit::scenario::report_to_json(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boostkit: Lorentz-boost generator and electromagnetic moment toolkit"};
  app.require_subcommand(1);

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("scenario", scenario_path, "path to scenario JSON")->required();

  std::string scenario_dir;
  auto* run_all = app.add_subcommand("run-all", "Run every scenario in a directory");
  run_all->add_option("directory", scenario_dir, "scenario directory")->required();

  auto* check = app.add_subcommand("check", "Run the built-in algebra suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  using namespace boostkit::scenario;

  if (run->parsed()) {
    const RunOutcome out = run_scenario(scenario_path);
    if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
    if (out.exit_code != 2) print_report(out.report);
    return out.exit_code;
  }
  if (run_all->parsed()) {
    const RunOutcome out = boostkit::scenario::run_all(scenario_dir, std::cout);
    if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
    std::cout << (out.exit_code == 0 ? "aggregate: pass" : "aggregate: fail") << "\n";
    return out.exit_code;
  }
  if (check->parsed()) {
    const Report r = builtin_algebra_check(seed_from_env());
    print_report(r);
    return r.pass() ? 0 : 1;
  }
  return 2;
}
