/**
 * @file bug_fixed.hpp
 * @brief Fixed-rank basis-update & Galerkin (BUG) step for the micro variable.
 */
#pragma once

#include <cstddef>

#include "mmbug/workspace.hpp"

namespace mmbug {

struct BugStepReport {
  std::size_t rank = 0;
  double x_defect = 0.0;  ///< orthonormality defect of the new X
  double v_defect = 0.0;  ///< orthonormality defect of the new V
  double dt = 0.0;
};

struct KStepResult {
  Matrix K;  ///< updated K = X S, (Nx+1) x r
  Matrix X;  ///< orthonormal basis of K
};

struct LStepResult {
  Matrix L;  ///< updated L = V S^T, N x r
  Matrix V;  ///< orthonormal basis of L
};

struct BugStepResult {
  MacroState macro;
  LowRankMicroState micro;
  BugStepReport report;
};

KStepResult k_step(const LowRankMicroState& state, const MacroState& macro, const Workspace& ws,
                   double dt);

LStepResult l_step(const LowRankMicroState& state, const MacroState& macro, const Workspace& ws,
                   double dt);

/**
 * Galerkin update of the coefficients in fixed bases (X_new, V_new) from the
 * projected initial value @p s_tilde. X_new and V_new may have different
 * column counts; the result is cols(X_new) x cols(V_new).
 */
Matrix galerkin_coefficients(const Matrix& x_new, const Matrix& v_new, const Matrix& s_tilde,
                             const MacroState& macro, const Workspace& ws, double dt);

/// S-step: S~ = (X_new^T X) S (V^T V_new) followed by the Galerkin update.
Matrix s_step(const Matrix& x_new, const Matrix& v_new, const LowRankMicroState& state_old,
              const MacroState& macro, const Workspace& ws, double dt);

/// First moment g_1 = X S V^T e_1 at every interface.
Vector first_moment(const LowRankMicroState& state);

BugStepResult step_bug_fixed(const MacroState& macro, const LowRankMicroState& state,
                             const Workspace& ws, double dt);

}  // namespace mmbug
