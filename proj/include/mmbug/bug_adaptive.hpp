/**
 * @file bug_adaptive.hpp
 * @brief Rank-adaptive asymptotic-preserving BUG step: the bases are augmented
 *        with the diffusion-limit directions, a Galerkin step runs in the
 *        augmented bases, and truncation never touches the b-direction.
 */
#pragma once

#include <cstddef>

#include "mmbug/bug_fixed.hpp"

namespace mmbug {

struct AugmentedFactors {
  Matrix X_hat;  ///< (Nx+1) x p, column 0 spans the limit vector w_ap
  Matrix V_hat;  ///< N x q, column 0 = b / ||b||
  Matrix M_hat;  ///< p x r, X_hat^T X
  Matrix N_hat;  ///< q x r, V_hat^T V
  Vector w_ap;   ///< beta delta0(a c T) / sigma at interfaces
};

struct TruncationConfig {
  double theta_rel = 5e-2;
  std::size_t max_rank = 0;  ///< 0 means min(Nx+1, N)
};

/// Intermediate factors of ap_truncate, exposed for verification.
struct TruncationTrace {
  double s_ap = 0.0;
  Matrix S_rem_hat;  ///< triangular factor of K_rem
  Matrix U_hat;      ///< leading r* left singular vectors of S_rem_hat
  Matrix W_hat;      ///< leading r* right singular vectors of S_rem_hat
  Vector singular_values;
  Matrix R2;
  std::size_t r_star = 0;
};

AugmentedFactors augment_bases(const LowRankMicroState& state, const MacroState& macro,
                               const Workspace& ws, double dt);

/// Galerkin coefficients in the augmented bases from S~ = M_hat S N_hat^T.
Matrix galerkin_s_hat(const AugmentedFactors& aug, const LowRankMicroState& state_old,
                      const MacroState& macro, const Workspace& ws, double dt);

LowRankMicroState ap_truncate(const AugmentedFactors& aug, const Matrix& s_hat,
                              const TruncationConfig& cfg, TruncationTrace* trace = nullptr);

BugStepResult step_bug_adaptive(const MacroState& macro, const LowRankMicroState& state,
                                const Workspace& ws, double dt, const TruncationConfig& cfg);

}  // namespace mmbug
