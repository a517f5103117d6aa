#include "mmbug/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mmbug {

CflBound compute_cfl_bound(const PhysicalParams& params, const StaggeredGrid& grid,
                           const AngularOperators& angular, const AbsorptionField& sigma) {
  if (!(sigma.sigma_min > 0.0)) {
    throw std::invalid_argument("compute_cfl_bound: sigma_min must be positive");
  }
  const double dx = grid.dx;
  const double scale = 1.0 / (5.0 * params.c * angular.beta_N);
  CflBound best;
  best.dt = std::numeric_limits<double>::infinity();
  bool found = false;
  const Vector& nodes = angular.quadrature.nodes;
  for (Eigen::Index k = 0; k < nodes.size(); ++k) {
    const double mu = nodes(k);
    if (mu == 0.0) continue;
    const double dt = scale * (2.0 * params.epsilon * dx / std::abs(mu) +
                               sigma.sigma_min * dx * dx / (mu * mu));
    if (dt < best.dt) {
      best.dt = dt;
      best.node = mu;
      found = true;
    }
  }
  if (!found) throw std::logic_error("compute_cfl_bound: every quadrature node is zero");
  return best;
}

double compute_cfl_dt(const PhysicalParams& params, const StaggeredGrid& grid,
                      const AngularOperators& angular, const AbsorptionField& sigma) {
  return compute_cfl_bound(params, grid, angular, sigma).dt;
}

double energy(const MacroState& macro, double micro_norm_sq, const PhysicalParams& params,
              const StaggeredGrid& grid) {
  const double eps = params.epsilon;
  const double a = params.a_rad;
  const Vector& t = macro.temperature;
  const double radiation =
      (a * t + (eps * eps / params.c) * macro.h_meso).squaredNorm() * grid.dx;
  const double micro_scale = eps / (legendre_norm(0) * params.c);
  const double material = 0.5 * a * params.c_nu * t.squaredNorm() * grid.dx;
  return radiation + micro_scale * micro_scale * micro_norm_sq + material;
}

double micro_norm_sq(const FullMicroState& micro, const StaggeredGrid& grid) {
  return micro.g.squaredNorm() * grid.dx;
}

double micro_norm_sq(const LowRankMicroState& micro, const StaggeredGrid& grid) {
  return micro.S.squaredNorm() * grid.dx;
}

double mass(const MacroState& macro, const PhysicalParams& params, const StaggeredGrid& grid) {
  const double eps = params.epsilon;
  return ((params.a_rad + 0.5 * params.c_nu) * macro.temperature.sum() +
          (eps * eps / params.c) * macro.h_meso.sum()) *
         grid.dx;
}

double relative_mass_error(double m_n, double m_0) {
  if (m_0 == 0.0) {
    if (m_n == 0.0) return 0.0;
    throw std::domain_error("relative_mass_error: reference mass is zero");
  }
  return std::abs(m_n - m_0) / std::abs(m_0);
}

Vector rosseland_step(const Vector& temperature, const PhysicalParams& params,
                      const StaggeredGrid& grid, const AbsorptionField& sigma, double dt,
                      BoundaryCondition bc) {
  if (!(dt > 0.0)) throw std::invalid_argument("rosseland_step: dt must be positive");
  const Eigen::Index nx = temperature.size();
  if (nx != static_cast<Eigen::Index>(grid.n_cells)) {
    throw std::invalid_argument("rosseland_step: length does not match the grid");
  }
  const MacroState macro{temperature, Vector::Zero(nx)};
  const BetaFields beta = beta_fields(macro, params.emission, bc);
  const Vector conductance = beta.interfaces.cwiseQuotient(sigma.at_interfaces);
  const Vector grad = apply_diff(DiffKind::DeltaZeroInterfaces, temperature, grid, bc);
  const Vector flux = conductance.cwiseProduct(grad);
  const Vector div = apply_diff(DiffKind::DZeroCenters, flux, grid, bc);

  const double a = params.a_rad;
  const double coeff = 2.0 * a * params.c / (3.0 * params.c_nu);
  Vector out(nx);
  for (Eigen::Index i = 0; i < nx; ++i) {
    out(i) = temperature(i) +
             dt * coeff / (1.0 + 2.0 * a * beta.centers(i) / params.c_nu) * div(i);
  }
  return out;
}

double l2_relative_difference(const Vector& u, const Vector& v, const StaggeredGrid& grid) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("l2_relative_difference: length mismatch");
  }
  const double diff = std::sqrt((u - v).squaredNorm() * grid.dx);
  const double ref = std::sqrt(v.squaredNorm() * grid.dx);
  return diff / std::max(ref, std::numeric_limits<double>::min());
}

}  // namespace mmbug
