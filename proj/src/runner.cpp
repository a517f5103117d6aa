#include "mmbug/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <string>

#include "mmbug/csv.hpp"
#include "mmbug/errors.hpp"
#include "mmbug/full_scheme.hpp"

namespace mmbug {

namespace {

constexpr double kViolationSlack = 1e-12;

// Explicit-Euler stability limit of the diffusion oracle, dx^2 / (2 max D).
double rosseland_dt_limit(const MacroState& macro, const Workspace& ws) {
  const PhysicalParams& p = ws.params;
  const BetaFields beta = beta_fields(macro, p.emission, ws.bc);
  const double coeff = 2.0 * p.a_rad * p.c / (3.0 * p.c_nu);
  double max_d = 0.0;
  const Eigen::Index nx = macro.temperature.size();
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double cond = std::max(beta.interfaces(i) / ws.sigma.at_interfaces(i),
                                 beta.interfaces(i + 1) / ws.sigma.at_interfaces(i + 1));
    max_d = std::max(max_d, coeff * cond / (1.0 + 2.0 * p.a_rad * beta.centers(i) / p.c_nu));
  }
  if (max_d == 0.0) return std::numeric_limits<double>::infinity();
  return ws.grid.dx * ws.grid.dx / (2.0 * max_d);
}

LowRankMicroState initial_low_rank(const FullMicroState& micro, const Workspace& ws,
                                   std::size_t rank) {
  if (micro.g.isZero(0.0)) return zero_low_rank(ws.n_interfaces(), ws.n_moments(), rank);
  return low_rank_from_dense(micro.g, rank);
}

void require_finite(const MacroState& macro, std::size_t step) {
  if (!macro.temperature.allFinite() || !macro.h_meso.allFinite()) {
    throw InvalidState("non-finite solution at step " + std::to_string(step));
  }
}

}  // namespace

SimulationResult simulate(const ScenarioSetup& setup, const SimulationOptions& options,
                          const std::function<void(const StepView&)>& observer) {
  const Workspace& ws = setup.ws;
  ws.validate();
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) {
    throw std::invalid_argument("simulate: dt must be positive");
  }
  if (!(options.t_end > 0.0)) throw std::invalid_argument("simulate: t_end must be positive");
  if (options.history_stride == 0) {
    throw std::invalid_argument("simulate: history_stride must be >= 1");
  }

  MacroState macro = setup.macro;
  FullMicroState full;
  LowRankMicroState low;
  std::size_t rank = 0;
  switch (options.scheme) {
    case SchemeKind::Full:
      full = setup.micro;
      rank = ws.n_moments();
      break;
    case SchemeKind::BugFixed:
    case SchemeKind::BugAdaptive:
      low = initial_low_rank(setup.micro, ws, options.rank);
      rank = low.rank();
      break;
    case SchemeKind::Rosseland:
      macro.h_meso.setZero();
      break;
  }

  auto current_energy = [&]() {
    switch (options.scheme) {
      case SchemeKind::Full:
        return energy(macro, micro_norm_sq(full, ws.grid), ws.params, ws.grid);
      case SchemeKind::BugFixed:
      case SchemeKind::BugAdaptive:
        return energy(macro, micro_norm_sq(low, ws.grid), ws.params, ws.grid);
      case SchemeKind::Rosseland:
        break;
    }
    return energy(macro, 0.0, ws.params, ws.grid);
  };

  SimulationResult result;
  result.dt = options.dt;
  result.initial_energy = current_energy();
  result.initial_mass = mass(macro, ws.params, ws.grid);
  result.max_rank = rank;

  const auto n_steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(options.t_end / options.dt * (1.0 - kViolationSlack))));

  for (std::size_t step = 1; step <= n_steps; ++step) {
    const double t_prev = static_cast<double>(step - 1) * options.dt;
    const bool last = step == n_steps;
    const double dt = last ? options.t_end - t_prev : options.dt;
    const double time = last ? options.t_end : static_cast<double>(step) * options.dt;

    double bound = options.cfl_dt;
    switch (options.scheme) {
      case SchemeKind::Full: {
        FullStepResult next = step_full(macro, full, ws, dt);
        macro = std::move(next.macro);
        full = std::move(next.micro);
        break;
      }
      case SchemeKind::BugFixed: {
        BugStepResult next = step_bug_fixed(macro, low, ws, dt);
        macro = std::move(next.macro);
        low = std::move(next.micro);
        rank = low.rank();
        break;
      }
      case SchemeKind::BugAdaptive: {
        BugStepResult next = step_bug_adaptive(macro, low, ws, dt, options.truncation);
        macro = std::move(next.macro);
        low = std::move(next.micro);
        rank = low.rank();
        break;
      }
      case SchemeKind::Rosseland:
        bound = rosseland_dt_limit(macro, ws);
        macro.temperature = rosseland_step(macro.temperature, ws.params, ws.grid, ws.sigma, dt,
                                           ws.bc);
        break;
    }
    require_finite(macro, step);
    result.max_rank = std::max(result.max_rank, rank);

    if (step % options.history_stride == 0 || last) {
      HistoryRow row;
      row.record.time = time;
      row.record.energy = current_energy();
      row.record.mass = mass(macro, ws.params, ws.grid);
      row.record.rel_mass_error = relative_mass_error(row.record.mass, result.initial_mass);
      row.record.rank = static_cast<long>(rank);
      row.record.dt = dt;
      row.cfl_violation = bound > 0.0 && dt > bound * (1.0 + kViolationSlack);
      result.history.push_back(row);
    }
    if (observer) observer(StepView{step, time, macro, rank});
  }

  result.steps = n_steps;
  result.phi = scalar_flux(macro, ws.params);
  result.macro = std::move(macro);
  return result;
}

ScenarioOverrides overrides_from(const RunConfig& config) {
  ScenarioOverrides o;
  o.nx = config.nx;
  o.n_moments = config.n_moments;
  o.epsilon = config.epsilon;
  o.t_end = config.t_end;
  o.theta_rel = config.theta_rel;
  if (config.scheme == SchemeKind::BugFixed) o.fixed_rank = config.rank;
  o.c = config.c;
  o.a_rad = config.a_rad;
  o.c_nu = config.c_nu;
  o.emission = config.emission;
  o.bc = config.bc;
  return o;
}

namespace {

std::size_t resolve_rank(const RunConfig& config, const ScenarioSetup& setup,
                         SchemeKind scheme) {
  const std::size_t fallback =
      scheme == SchemeKind::BugFixed ? setup.fixed_rank : setup.adaptive_rank;
  const std::size_t rank = config.rank.value_or(fallback);
  const bool low_rank = scheme == SchemeKind::BugFixed || scheme == SchemeKind::BugAdaptive;
  if (low_rank && rank > std::min(setup.ws.n_interfaces(), setup.ws.n_moments())) {
    throw std::invalid_argument("rank exceeds min(nx+1, n_moments)");
  }
  return rank;
}

void write_run(const std::filesystem::path& dir, const ScenarioSetup& setup,
               const SimulationResult& result) {
  std::filesystem::create_directories(dir);
  write_text_file((dir / "history.csv").string(), history_csv(result.history));
  write_text_file((dir / "profiles.csv").string(),
                  profiles_csv(setup.ws.grid, result.macro, result.phi));
}

}  // namespace

RunPlan plan_run(const RunConfig& config) {
  RunPlan plan{build_scenario(scenario_from_name(config.scenario), overrides_from(config)), {},
               {}};
  const Workspace& ws = plan.setup.ws;
  plan.cfl = compute_cfl_bound(ws.params, ws.grid, ws.angular, ws.sigma);

  SimulationOptions& o = plan.options;
  o.scheme = config.scheme;
  o.cfl_dt = plan.cfl.dt;
  o.dt = config.dt.value_or(config.cfl_safety * plan.cfl.dt);
  o.t_end = plan.setup.t_end;
  o.rank = resolve_rank(config, plan.setup, config.scheme);
  o.truncation.theta_rel = plan.setup.theta_rel;
  o.truncation.max_rank = config.max_rank.value_or(0);
  o.history_stride = config.history_stride;
  return plan;
}

SimulationResult run_simulation(const RunConfig& config) {
  const RunPlan plan = plan_run(config);
  SimulationResult result = simulate(plan.setup, plan.options);
  write_run(config.output_dir, plan.setup, result);
  return result;
}

std::vector<SweepEntry> run_sweep(const RunConfig& config,
                                  const std::vector<SchemeKind>& schemes) {
  if (schemes.empty()) throw std::invalid_argument("run_sweep: no schemes given");
  RunConfig shared = config;
  shared.scheme = SchemeKind::Full;
  const RunPlan plan = plan_run(shared);
  std::vector<SweepEntry> entries;
  const std::filesystem::path root(config.output_dir);
  for (SchemeKind scheme : schemes) {
    SimulationOptions options = plan.options;
    options.scheme = scheme;
    options.rank = resolve_rank(config, plan.setup, scheme);
    SimulationResult result = simulate(plan.setup, options);
    write_run(root / scheme_label(scheme), plan.setup, result);
    entries.push_back(SweepEntry{scheme, std::move(result)});
  }

  std::vector<ComparisonRow> rows;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const SimulationResult& a = entries[i].result;
      const SimulationResult& b = entries[j].result;
      rows.push_back(ComparisonRow{
          scheme_label(entries[i].scheme), scheme_label(entries[j].scheme),
          l2_relative_difference(a.macro.temperature, b.macro.temperature, plan.setup.ws.grid),
          l2_relative_difference(a.phi, b.phi, plan.setup.ws.grid)});
    }
  }
  std::filesystem::create_directories(root);
  write_text_file((root / "comparison.csv").string(), comparison_csv(rows));
  return entries;
}

}  // namespace mmbug
