/**
 * @file diagnostics.hpp
 * @brief Time-step bound, energy, mass, the Rosseland diffusion oracle, and
 *        comparison metrics.
 */
#pragma once

#include <cstddef>

#include "mmbug/workspace.hpp"

namespace mmbug {

struct DiagnosticsRecord {
  double time = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  double rel_mass_error = 0.0;
  long rank = 0;
  double dt = 0.0;
};

struct CflBound {
  double dt = 0.0;
  double node = 0.0;  ///< minimizing quadrature node (first in increasing order)
};

/// min over nonzero nodes mu_k of (2 eps dx/|mu_k| + sigma_min dx^2/mu_k^2) / (5 c beta_N).
CflBound compute_cfl_bound(const PhysicalParams& params, const StaggeredGrid& grid,
                           const AngularOperators& angular, const AbsorptionField& sigma);
double compute_cfl_dt(const PhysicalParams& params, const StaggeredGrid& grid,
                      const AngularOperators& angular, const AbsorptionField& sigma);

/// micro_norm_sq is sum_j |g_j|^2 dx (dense: ||G||_F^2 dx, low rank: ||S||_F^2 dx).
double energy(const MacroState& macro, double micro_norm_sq, const PhysicalParams& params,
              const StaggeredGrid& grid);

double micro_norm_sq(const FullMicroState& micro, const StaggeredGrid& grid);
double micro_norm_sq(const LowRankMicroState& micro, const StaggeredGrid& grid);

double mass(const MacroState& macro, const PhysicalParams& params, const StaggeredGrid& grid);

/// |m_n - m_0| / |m_0|; 0 when both vanish; throws std::domain_error when
/// only m_0 vanishes.
double relative_mass_error(double m_n, double m_0);

/// Explicit Euler step of the discrete Rosseland diffusion equation.
Vector rosseland_step(const Vector& temperature, const PhysicalParams& params,
                      const StaggeredGrid& grid, const AbsorptionField& sigma, double dt,
                      BoundaryCondition bc = BoundaryCondition::ZeroGhost);

/// ||u - v|| / max(||v||, tiny) in the dx-weighted discrete L2 norm.
double l2_relative_difference(const Vector& u, const Vector& v, const StaggeredGrid& grid);

}  // namespace mmbug
