#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mmbug/csv.hpp"
#include "mmbug/runner.hpp"

namespace {

void print_cfl(const mmbug::RunPlan& plan) {
  std::cout << "cfl_dt = " << mmbug::format_double(plan.cfl.dt) << '\n'
            << "node = " << mmbug::format_double(plan.cfl.node) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray thermal radiative transfer: macro-micro P_N and low-rank BUG solvers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scheme_list = "full,bug_fixed,bug_adaptive,rosseland";

  auto* run = app.add_subcommand("run", "Run one scheme, write history.csv and profiles.csv");
  run->add_option("config", config_path, "Config file (key = value)")->required();
  auto* cfl = app.add_subcommand("cfl", "Print the energy-stable time-step bound");
  cfl->add_option("config", config_path, "Config file (key = value)")->required();
  auto* sweep = app.add_subcommand("sweep", "Run several schemes and compare them");
  sweep->add_option("config", config_path, "Config file (key = value)")->required();
  sweep->add_option("--schemes", scheme_list, "Comma-separated scheme names")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const mmbug::RunConfig config = mmbug::load_config(config_path);
    if (cfl->parsed()) {
      print_cfl(mmbug::plan_run(config));
    } else if (run->parsed()) {
      const mmbug::RunPlan plan = mmbug::plan_run(config);
      print_cfl(plan);
      const mmbug::SimulationResult result = mmbug::run_simulation(config);
      std::cout << "scheme = " << mmbug::scheme_label(config.scheme) << '\n'
                << "steps = " << result.steps << '\n'
                << "max_rank = " << result.max_rank << '\n'
                << "output = " << config.output_dir << '\n';
    } else if (sweep->parsed()) {
      const auto schemes = mmbug::parse_scheme_list(scheme_list);
      print_cfl(mmbug::plan_run(config));
      for (const auto& entry : mmbug::run_sweep(config, schemes)) {
        std::cout << mmbug::scheme_label(entry.scheme) << ": steps = " << entry.result.steps
                  << ", max_rank = " << entry.result.max_rank << '\n';
      }
      std::cout << "output = " << config.output_dir << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
