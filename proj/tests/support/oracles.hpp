#pragma once

// Scalar-loop transcriptions of the update formulas, written without the
// library's matrix operators so they can serve as independent references.

#include "mmbug/bug_fixed.hpp"
#include "mmbug/workspace.hpp"

namespace mmbug::testing {

/// A+ and A- for two moments, summed directly over the three-point rule
/// with closed-form Legendre polynomials.
struct TwoMomentFlux {
  double plus[2][2];
  double minus[2][2];
};
TwoMomentFlux two_moment_flux();

/// Workspace of the hand instance: [0, nx] with dx = 1, sigma = 1, eps = 1,
/// a = c = c_nu = 1, linear emission, zero ghosts.
Workspace hand_workspace(std::size_t nx, std::size_t n_moments);

/// One full-scheme step on the two-moment hand instance.
struct FullOracleResult {
  Matrix g;
  Vector h;
  Vector T;
};
FullOracleResult full_step_oracle(const Vector& T, const Vector& h, const Matrix& g, double dt);

/// Rank-one L-step written with explicit sums over interfaces.
Vector l_step_rank_one_oracle(const LowRankMicroState& state, const MacroState& macro,
                              const Workspace& ws, double dt);

/// S-step through the dense right-hand side projected onto the new bases.
Matrix s_step_dense_oracle(const Matrix& x_new, const Matrix& v_new,
                           const LowRankMicroState& state_old, const MacroState& macro,
                           const Workspace& ws, double dt);

/// Rosseland step for linear emission with zero ghosts, as scalar loops.
Vector rosseland_oracle(const Vector& T, const Vector& sigma_interfaces, double dx, double dt);

}  // namespace mmbug::testing
