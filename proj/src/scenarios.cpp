#include "mmbug/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmbug {

double SigmaSpec::operator()(double x) const {
  if (insert && x >= insert->x_lo && x <= insert->x_hi) return insert->value;
  return background;
}

double SigmaSpec::minimum() const {
  return insert ? std::min(background, insert->value) : background;
}

namespace {

double pulse_temperature(double x, const SigmaSpec& sigma) {
  return std::abs(x) <= 0.5 ? 100.0 / sigma(x) : 0.0;
}

}  // namespace

Scenario rectangular_pulse() {
  Scenario s;
  s.name = ScenarioName::RectangularPulse;
  s.initial_temperature = pulse_temperature;
  return s;
}

Scenario absorber() {
  Scenario s = rectangular_pulse();
  s.name = ScenarioName::Absorber;
  s.sigma.insert = SigmaInsert{5.0, -0.25, 0.25};
  return s;
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "rectangular_pulse") return rectangular_pulse();
  if (name == "absorber") return absorber();
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::string scenario_label(ScenarioName name) {
  switch (name) {
    case ScenarioName::RectangularPulse:
      return "rectangular_pulse";
    case ScenarioName::Absorber:
      return "absorber";
    case ScenarioName::Custom:
      break;
  }
  return "custom";
}

ScenarioSetup build_scenario(const Scenario& scenario, const ScenarioOverrides& overrides) {
  if (!scenario.initial_temperature) {
    throw std::invalid_argument("build_scenario: scenario has no initial temperature");
  }
  if (!(scenario.sigma.minimum() > 0.0)) {
    throw std::invalid_argument("build_scenario: absorption must be positive");
  }
  const ScenarioDefaults& d = scenario.defaults;
  const double eps = overrides.epsilon.value_or(d.epsilon);
  const bool diffusive = eps < kDiffusiveEpsilon;
  const std::size_t nx = overrides.nx.value_or(diffusive ? 201 : d.nx);
  const std::size_t n_moments = overrides.n_moments.value_or(d.n_moments);
  if (nx == 0) throw std::invalid_argument("build_scenario: nx must be >= 1");
  if (n_moments == 0) throw std::invalid_argument("build_scenario: n_moments must be >= 1");

  ScenarioSetup setup;
  setup.t_end = overrides.t_end.value_or(d.t_end);
  setup.theta_rel = overrides.theta_rel.value_or(d.theta_rel);
  setup.adaptive_rank = d.adaptive_rank;
  const std::size_t rank_limit = std::min(nx + 1, n_moments);
  if (overrides.fixed_rank) {
    setup.fixed_rank = *overrides.fixed_rank;
    if (setup.fixed_rank == 0 || setup.fixed_rank > rank_limit) {
      throw std::invalid_argument("build_scenario: rank must lie in [1, min(nx+1, n_moments)]");
    }
  } else {
    setup.fixed_rank = std::min(diffusive ? std::size_t{1} : d.fixed_rank, rank_limit);
  }
  if (!(setup.t_end > 0.0) || !std::isfinite(setup.t_end)) {
    throw std::invalid_argument("build_scenario: t_end must be positive");
  }
  if (!(setup.theta_rel >= 0.0)) {
    throw std::invalid_argument("build_scenario: theta_rel must be nonnegative");
  }

  Workspace& ws = setup.ws;
  ws.params.epsilon = eps;
  ws.params.c = overrides.c.value_or(1.0);
  ws.params.a_rad = overrides.a_rad.value_or(1.0);
  ws.params.c_nu = overrides.c_nu.value_or(1.0);
  ws.params.emission = overrides.emission.value_or(Emission::Linear);
  ws.params.validate();
  ws.bc = overrides.bc.value_or(BoundaryCondition::ZeroGhost);
  ws.grid = make_grid(scenario.x_min, scenario.x_max, nx);
  ws.sigma = make_absorption(ws.grid, [&](double x) { return scenario.sigma(x); });
  ws.angular = build_angular_operators(n_moments);
  ws.validate();

  auto t0 = [&](double x) { return scenario.initial_temperature(x, scenario.sigma); };
  if (scenario.initial_density) {
    auto [macro, micro] =
        init_from_kinetic(scenario.initial_density, t0, ws.grid, ws.params, ws.angular.quadrature);
    setup.macro = std::move(macro);
    setup.micro = std::move(micro);
  } else {
    // equilibrium: both fluctuation parts vanish exactly
    setup.macro.temperature = ws.grid.centers.unaryExpr(t0);
    setup.macro.h_meso = Vector::Zero(ws.grid.centers.size());
    setup.micro.g = Matrix::Zero(ws.grid.interfaces.size(),
                                 static_cast<Eigen::Index>(n_moments));
  }
  return setup;
}

}  // namespace mmbug
