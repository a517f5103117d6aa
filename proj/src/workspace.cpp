#include "mmbug/workspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mmbug/errors.hpp"

namespace mmbug {

void Workspace::validate() const {
  params.validate();
  const auto nx = static_cast<Eigen::Index>(grid.n_cells);
  if (grid.centers.size() != nx || grid.interfaces.size() != nx + 1) {
    throw std::invalid_argument("Workspace: grid arrays inconsistent with n_cells");
  }
  if (sigma.at_centers.size() != nx || sigma.at_interfaces.size() != nx + 1) {
    throw std::invalid_argument("Workspace: absorption arrays inconsistent with the grid");
  }
  if (!(sigma.sigma_min > 0.0)) {
    throw std::invalid_argument("Workspace: sigma_min must be positive");
  }
  const auto n = static_cast<Eigen::Index>(angular.n_moments);
  if (n == 0 || angular.A.rows() != n || angular.b_vec.size() != n) {
    throw std::invalid_argument("Workspace: angular operators inconsistent with n_moments");
  }
}

Vector interface_source(const MacroState& macro, const Workspace& ws) {
  const PhysicalParams& p = ws.params;
  const BetaFields beta = beta_fields(macro, p.emission, ws.bc);
  const Vector act = (p.a_rad * p.c) * macro.temperature;
  const Vector grad_t = apply_diff(DiffKind::DeltaZeroInterfaces, act, ws.grid, ws.bc);
  const Vector grad_h = apply_diff(DiffKind::DeltaZeroInterfaces, macro.h_meso, ws.grid, ws.bc);
  return beta.interfaces.cwiseProduct(grad_t) + (p.epsilon * p.epsilon) * grad_h;
}

Vector interface_denominator(const Workspace& ws, double dt) {
  const double e = ws.params.epsilon * ws.params.epsilon / (ws.params.c * dt);
  return ws.sigma.at_interfaces.array() + e;
}

MacroState update_macro(const MacroState& macro, const Vector& g1_new, const Workspace& ws,
                        double dt) {
  const PhysicalParams& p = ws.params;
  const double e = p.epsilon * p.epsilon / (p.c * dt);
  const double alpha = p.alpha();
  const double half_norm_p1 = 0.5 * legendre_norm(1);
  const Vector beta = beta_fields(macro, p.emission, ws.bc).centers;
  const Vector div_g1 = apply_diff(DiffKind::DZeroCenters, g1_new, ws.grid, ws.bc);

  MacroState out;
  out.h_meso.resize(macro.h_meso.size());
  out.temperature.resize(macro.temperature.size());
  for (Eigen::Index i = 0; i < out.h_meso.size(); ++i) {
    const double sig = ws.sigma.at_centers(i);
    out.h_meso(i) = (e * macro.h_meso(i) - half_norm_p1 * div_g1(i)) /
                    (e + sig * (1.0 + p.a_rad * alpha * beta(i)));
    out.temperature(i) = macro.temperature(i) + dt * alpha * sig * out.h_meso(i);
  }
  return out;
}

void check_step_inputs(const MacroState& macro, const Workspace& ws, double dt) {
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw std::invalid_argument("time step must be a positive finite number");
  }
  const auto nx = static_cast<Eigen::Index>(ws.grid.n_cells);
  if (macro.temperature.size() != nx || macro.h_meso.size() != nx) {
    throw InvalidState("macro state length does not match the grid");
  }
  if (!macro.temperature.allFinite() || !macro.h_meso.allFinite()) {
    throw InvalidState("macro state holds non-finite values");
  }
}

}  // namespace mmbug
