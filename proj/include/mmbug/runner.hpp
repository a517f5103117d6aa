/**
 * @file runner.hpp
 * @brief Simulation driver: time loop, diagnostics history and CSV output.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mmbug/bug_adaptive.hpp"
#include "mmbug/config.hpp"
#include "mmbug/diagnostics.hpp"
#include "mmbug/scenarios.hpp"

namespace mmbug {

struct HistoryRow {
  DiagnosticsRecord record;
  bool cfl_violation = false;
};

struct SimulationOptions {
  SchemeKind scheme = SchemeKind::Full;
  double dt = 0.0;      ///< step size; the last step is clipped to t_end
  double t_end = 0.0;
  double cfl_dt = 0.0;  ///< bound used to flag violations
  std::size_t rank = 1;  ///< bug_fixed rank, or the initial bug_adaptive rank
  TruncationConfig truncation;
  std::size_t history_stride = 1;
};

/// Read-only view handed to an observer after every step.
struct StepView {
  std::size_t step = 0;
  double time = 0.0;
  const MacroState& macro;
  std::size_t rank = 0;
};

struct SimulationResult {
  MacroState macro;
  Vector phi;
  std::vector<HistoryRow> history;
  std::size_t steps = 0;
  std::size_t max_rank = 0;
  double dt = 0.0;
  double initial_energy = 0.0;
  double initial_mass = 0.0;
};

/// Runs one scheme on a built scenario. History rows are recorded after
/// every history_stride-th step and after the final step. Throws
/// InvalidState naming the step index when a NaN appears.
SimulationResult simulate(const ScenarioSetup& setup, const SimulationOptions& options,
                          const std::function<void(const StepView&)>& observer = {});

ScenarioOverrides overrides_from(const RunConfig& config);

struct RunPlan {
  ScenarioSetup setup;
  SimulationOptions options;
  CflBound cfl;
};

/// Builds the scenario and resolves dt (override or cfl_safety * bound).
RunPlan plan_run(const RunConfig& config);

/// Runs the configured scheme and writes history.csv and profiles.csv to
/// config.output_dir (created if needed).
SimulationResult run_simulation(const RunConfig& config);

struct SweepEntry {
  SchemeKind scheme;
  SimulationResult result;
};

/// Runs each scheme on the shared scenario, writes <output_dir>/<scheme>/
/// and comparison.csv with pairwise relative L2 differences of T and Phi.
std::vector<SweepEntry> run_sweep(const RunConfig& config, const std::vector<SchemeKind>& schemes);

}  // namespace mmbug
