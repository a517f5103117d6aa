/**
 * @file workspace.hpp
 * @brief Discretization data shared by all time steppers, and the macro
 *        (h, T) update common to the full and low-rank schemes.
 */
#pragma once

#include "mmbug/angular.hpp"
#include "mmbug/mesh.hpp"

namespace mmbug {

struct Workspace {
  StaggeredGrid grid;
  PhysicalParams params;
  AbsorptionField sigma;
  AngularOperators angular;
  BoundaryCondition bc = BoundaryCondition::ZeroGhost;

  /// Throws std::invalid_argument on inconsistent dimensions or parameters.
  void validate() const;
  [[nodiscard]] std::size_t n_moments() const { return angular.n_moments; }
  [[nodiscard]] std::size_t n_interfaces() const { return grid.n_interfaces(); }
};

/// Source term of the micro equation at interfaces:
/// beta_{j} * delta0(a c T)_j + eps^2 * delta0(h)_j.
Vector interface_source(const MacroState& macro, const Workspace& ws);

/// Implicit absorption denominator at interfaces, eps^2/(c dt) + sigma_j.
Vector interface_denominator(const Workspace& ws, double dt);

/**
 * h then T update given the new first moment g_1 at interfaces:
 *   h_i <- [eps^2/(c dt) h_i - (||P~_1||/2) D0 g1_i] / (eps^2/(c dt) + sigma_i (1 + a alpha beta_i))
 *   T_i <- T_i + dt alpha sigma_i h_i
 */
MacroState update_macro(const MacroState& macro, const Vector& g1_new, const Workspace& ws,
                        double dt);

/// Throws InvalidState on shape mismatch or non-finite entries, and
/// std::invalid_argument when dt is not a positive finite number.
void check_step_inputs(const MacroState& macro, const Workspace& ws, double dt);

}  // namespace mmbug
