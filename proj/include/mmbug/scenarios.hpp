/**
 * @file scenarios.hpp
 * @brief Rectangular-pulse and absorber test problems with regime presets.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "mmbug/workspace.hpp"

namespace mmbug {

enum class ScenarioName { RectangularPulse, Absorber, Custom };

struct SigmaInsert {
  double value = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
};

/// Piecewise-constant absorption: background value plus an optional insert
/// on [x_lo, x_hi] (inclusive).
struct SigmaSpec {
  double background = 0.5;
  std::optional<SigmaInsert> insert;

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double minimum() const;
};

struct ScenarioDefaults {
  std::size_t nx = 501;
  std::size_t n_moments = 100;
  double epsilon = 1.0;
  double t_end = 1.5;
  std::size_t fixed_rank = 5;
  std::size_t adaptive_rank = 1;
  double theta_rel = 5e-2;
};

struct Scenario {
  ScenarioName name = ScenarioName::Custom;
  double x_min = -10.0;
  double x_max = 10.0;
  SigmaSpec sigma;
  /// T0(x); receives sigma so the pulse can scale with 1/sigma(x).
  std::function<double(double x, const SigmaSpec& sigma)> initial_temperature;
  /// Kinetic density f0(x, mu); empty means equilibrium f0 = B(T0).
  std::function<double(double x, double mu)> initial_density;
  ScenarioDefaults defaults;
};

/// Below this epsilon the diffusive preset applies (Nx = 201, fixed rank 1).
inline constexpr double kDiffusiveEpsilon = 1e-3;

struct ScenarioOverrides {
  std::optional<std::size_t> nx;
  std::optional<std::size_t> n_moments;
  std::optional<double> epsilon;
  std::optional<double> t_end;
  std::optional<double> theta_rel;
  std::optional<std::size_t> fixed_rank;
  std::optional<double> c;
  std::optional<double> a_rad;
  std::optional<double> c_nu;
  std::optional<Emission> emission;
  std::optional<BoundaryCondition> bc;
};

struct ScenarioSetup {
  Workspace ws;
  MacroState macro;
  FullMicroState micro;
  double t_end = 0.0;
  std::size_t fixed_rank = 1;
  std::size_t adaptive_rank = 1;
  double theta_rel = 0.0;
};

Scenario rectangular_pulse();
Scenario absorber();

/// "rectangular_pulse" or "absorber"; throws std::invalid_argument otherwise.
Scenario scenario_from_name(const std::string& name);
std::string scenario_label(ScenarioName name);

/// Throws std::invalid_argument on invalid overrides.
ScenarioSetup build_scenario(const Scenario& scenario, const ScenarioOverrides& overrides = {});

}  // namespace mmbug
