#include "mmbug/bug_adaptive.hpp"

#include <algorithm>
#include <cmath>

namespace mmbug {

namespace {

// Scales nonzero columns to unit length; the span is unchanged.
Matrix normalized_columns(Matrix m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double norm = m.col(j).norm();
    if (norm > 0.0) m.col(j) /= norm;
  }
  return m;
}

Matrix hstack(std::initializer_list<const Matrix*> blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const Matrix* b : blocks) {
    rows = b->rows();
    cols += b->cols();
  }
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const Matrix* b : blocks) {
    out.middleCols(at, b->cols()) = *b;
    at += b->cols();
  }
  return out;
}

}  // namespace

AugmentedFactors augment_bases(const LowRankMicroState& state, const MacroState& macro,
                               const Workspace& ws, double dt) {
  const KStepResult k = k_step(state, macro, ws, dt);
  const LStepResult l = l_step(state, macro, ws, dt);
  const PhysicalParams& p = ws.params;

  AugmentedFactors aug;
  const BetaFields beta = beta_fields(macro, p.emission, ws.bc);
  const Vector act = (p.a_rad * p.c) * macro.temperature;
  aug.w_ap = beta.interfaces.cwiseProduct(
                 apply_diff(DiffKind::DeltaZeroInterfaces, act, ws.grid, ws.bc))
                 .cwiseQuotient(ws.sigma.at_interfaces);

  const Matrix w = aug.w_ap;
  const Matrix b = ws.angular.b_vec;
  aug.X_hat = orthonormalize(normalized_columns(hstack({&w, &k.K, &state.X}))).Q;
  aug.V_hat = orthonormalize(normalized_columns(hstack({&b, &l.L, &state.V}))).Q;
  aug.M_hat = aug.X_hat.transpose() * state.X;
  aug.N_hat = aug.V_hat.transpose() * state.V;
  return aug;
}

Matrix galerkin_s_hat(const AugmentedFactors& aug, const LowRankMicroState& state_old,
                      const MacroState& macro, const Workspace& ws, double dt) {
  const Matrix s_tilde = aug.M_hat * state_old.S * aug.N_hat.transpose();
  return galerkin_coefficients(aug.X_hat, aug.V_hat, s_tilde, macro, ws, dt);
}

LowRankMicroState ap_truncate(const AugmentedFactors& aug, const Matrix& s_hat,
                              const TruncationConfig& cfg, TruncationTrace* trace) {
  const Eigen::Index rows = aug.X_hat.rows();
  const Eigen::Index n = aug.V_hat.rows();
  const Eigen::Index q = aug.V_hat.cols();
  Eigen::Index cap = std::min(rows, n);
  if (cfg.max_rank > 0) cap = std::min(cap, static_cast<Eigen::Index>(cfg.max_rank));

  const Matrix k_hat = aug.X_hat * s_hat;
  const Vector k_ap = k_hat.col(0);

  // remainder: QR, SVD and the tail criterion
  Eigen::Index r_star = 0;
  Matrix x_rem = Matrix::Zero(rows, 0);
  Matrix w_rem = Matrix::Zero(q - 1, 0);
  Vector sigma_kept = Vector::Zero(0);
  ThinQR rem_qr;
  Eigen::JacobiSVD<Matrix> svd;
  if (q > 1 && cap > 1) {
    rem_qr = orthonormalize(k_hat.rightCols(q - 1));
    svd.compute(rem_qr.R, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    const Eigen::Index count = sv.size();
    const double theta = cfg.theta_rel * (count > 0 ? sv(0) : 0.0);
    r_star = count;
    double tail_sq = 0.0;
    for (Eigen::Index k = count; k >= 1; --k) {
      // tail beyond index k-1 includes sv(k-1)
      tail_sq += sv(k - 1) * sv(k - 1);
      if (std::sqrt(tail_sq) <= theta) {
        r_star = k - 1;
      } else {
        break;
      }
    }
    r_star = std::clamp<Eigen::Index>(r_star, 1, std::min(count, cap - 1));
    x_rem = rem_qr.Q * svd.matrixU().leftCols(r_star);
    w_rem = svd.matrixV().leftCols(r_star);
    sigma_kept = sv.head(r_star);
  }

  const double k_norm = k_hat.norm();
  double s_ap = k_ap.norm();
  Vector x_ap;
  if (s_ap > 1e-14 * k_norm && s_ap > 0.0) {
    x_ap = k_ap / s_ap;
  } else {
    s_ap = 0.0;
    Matrix seed(rows, r_star + 1);
    seed.leftCols(r_star) = x_rem;
    seed.col(r_star).setZero();
    x_ap = orthonormalize(seed).Q.col(r_star);
  }

  Matrix pre(rows, r_star + 1);
  pre.col(0) = x_ap;
  pre.rightCols(r_star) = x_rem;
  ThinQR final_qr = orthonormalize(pre);

  Matrix block = Matrix::Zero(r_star + 1, r_star + 1);
  block(0, 0) = s_ap;
  block.bottomRightCorner(r_star, r_star) = sigma_kept.asDiagonal();

  LowRankMicroState out;
  out.X = final_qr.Q;
  out.S = final_qr.R * block;
  out.V.resize(n, r_star + 1);
  out.V.col(0) = aug.V_hat.col(0);
  if (r_star > 0) out.V.rightCols(r_star) = aug.V_hat.rightCols(q - 1) * w_rem;

  if (trace != nullptr) {
    trace->s_ap = s_ap;
    trace->S_rem_hat = rem_qr.R;
    trace->U_hat = r_star > 0 ? Matrix(svd.matrixU().leftCols(r_star)) : Matrix();
    trace->W_hat = w_rem;
    trace->singular_values = r_star > 0 ? Vector(svd.singularValues()) : Vector();
    trace->R2 = final_qr.R;
    trace->r_star = static_cast<std::size_t>(r_star);
  }
  return out;
}

BugStepResult step_bug_adaptive(const MacroState& macro, const LowRankMicroState& state,
                                const Workspace& ws, double dt, const TruncationConfig& cfg) {
  const AugmentedFactors aug = augment_bases(state, macro, ws, dt);
  const Matrix s_hat = galerkin_s_hat(aug, state, macro, ws, dt);

  BugStepResult out;
  out.micro = ap_truncate(aug, s_hat, cfg);
  out.macro = update_macro(macro, first_moment(out.micro), ws, dt);
  out.report.rank = out.micro.rank();
  out.report.x_defect = orthonormality_defect(out.micro.X);
  out.report.v_defect = orthonormality_defect(out.micro.V);
  out.report.dt = dt;
  return out;
}

}  // namespace mmbug
