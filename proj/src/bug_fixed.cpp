#include "mmbug/bug_fixed.hpp"

#include "mmbug/errors.hpp"

namespace mmbug {

namespace {

void check_low_rank(const LowRankMicroState& state, const Workspace& ws) {
  const auto rows = static_cast<Eigen::Index>(ws.n_interfaces());
  const auto n = static_cast<Eigen::Index>(ws.n_moments());
  const Eigen::Index r = state.S.rows();
  if (r == 0 || state.S.cols() != r || state.X.rows() != rows || state.X.cols() != r ||
      state.V.rows() != n || state.V.cols() != r) {
    throw InvalidState("low-rank factors have inconsistent shapes");
  }
  if (!state.X.allFinite() || !state.S.allFinite() || !state.V.allFinite()) {
    throw InvalidState("low-rank factors hold non-finite values");
  }
}

double shift(const Workspace& ws, double dt) {
  return ws.params.epsilon * ws.params.epsilon / (ws.params.c * dt);
}

}  // namespace

KStepResult k_step(const LowRankMicroState& state, const MacroState& macro, const Workspace& ws,
                   double dt) {
  check_step_inputs(macro, ws, dt);
  check_low_rank(state, ws);
  const AngularOperators& ang = ws.angular;
  const Matrix& v = state.V;
  const Matrix k = state.X * state.S;
  const Matrix ap = v.transpose() * ang.A_plus * v;
  const Matrix am = v.transpose() * ang.A_minus * v;
  const Matrix dm = apply_diff(DiffKind::DMinus, k, ws.grid, ws.bc);
  const Matrix dp = apply_diff(DiffKind::DPlus, k, ws.grid, ws.bc);
  const Vector vb = v.transpose() * ang.b_vec;

  const Matrix rhs = shift(ws, dt) * k - ws.params.epsilon * (dm * ap + dp * am) -
                     interface_source(macro, ws) * vb.transpose();
  KStepResult out;
  out.K = interface_denominator(ws, dt).cwiseInverse().asDiagonal() * rhs;
  out.X = orthonormalize(out.K).Q;
  return out;
}

LStepResult l_step(const LowRankMicroState& state, const MacroState& macro, const Workspace& ws,
                   double dt) {
  check_step_inputs(macro, ws, dt);
  check_low_rank(state, ws);
  const AngularOperators& ang = ws.angular;
  const Matrix& x = state.X;
  const Eigen::Index r = x.cols();
  const double e = shift(ws, dt);
  const Matrix l = state.V * state.S.transpose();
  const Matrix p_minus = apply_diff(DiffKind::DMinus, x, ws.grid, ws.bc).transpose() * x;
  const Matrix p_plus = apply_diff(DiffKind::DPlus, x, ws.grid, ws.bc).transpose() * x;
  const Matrix c = x.transpose() * ws.sigma.at_interfaces.asDiagonal() * x;
  const Vector xs = x.transpose() * interface_source(macro, ws);

  const Matrix rhs = e * l -
                     ws.params.epsilon * (ang.A_plus * l * p_minus + ang.A_minus * l * p_plus) -
                     ang.b_vec * xs.transpose();
  Matrix lhs = c + e * Matrix::Identity(r, r);
  lhs = 0.5 * (lhs + lhs.transpose());
  LStepResult out;
  out.L = solve_right_spd(lhs, rhs);
  out.V = orthonormalize(out.L).Q;
  return out;
}

Matrix galerkin_coefficients(const Matrix& x_new, const Matrix& v_new, const Matrix& s_tilde,
                             const MacroState& macro, const Workspace& ws, double dt) {
  check_step_inputs(macro, ws, dt);
  const AngularOperators& ang = ws.angular;
  const Eigen::Index p = x_new.cols();
  const double e = shift(ws, dt);
  const Matrix xdm = x_new.transpose() * apply_diff(DiffKind::DMinus, x_new, ws.grid, ws.bc);
  const Matrix xdp = x_new.transpose() * apply_diff(DiffKind::DPlus, x_new, ws.grid, ws.bc);
  const Matrix vap = v_new.transpose() * ang.A_plus * v_new;
  const Matrix vam = v_new.transpose() * ang.A_minus * v_new;
  const Vector xs = x_new.transpose() * interface_source(macro, ws);
  const Vector vb = v_new.transpose() * ang.b_vec;

  const Matrix rhs = e * s_tilde - ws.params.epsilon * (xdm * s_tilde * vap + xdp * s_tilde * vam) -
                     xs * vb.transpose();
  Matrix lhs = x_new.transpose() * ws.sigma.at_interfaces.asDiagonal() * x_new +
               e * Matrix::Identity(p, p);
  lhs = 0.5 * (lhs + lhs.transpose());
  return solve_left_spd(lhs, rhs);
}

Matrix s_step(const Matrix& x_new, const Matrix& v_new, const LowRankMicroState& state_old,
              const MacroState& macro, const Workspace& ws, double dt) {
  const Matrix s_tilde =
      (x_new.transpose() * state_old.X) * state_old.S * (state_old.V.transpose() * v_new);
  return galerkin_coefficients(x_new, v_new, s_tilde, macro, ws, dt);
}

Vector first_moment(const LowRankMicroState& state) {
  return state.X * (state.S * state.V.row(0).transpose());
}

BugStepResult step_bug_fixed(const MacroState& macro, const LowRankMicroState& state,
                             const Workspace& ws, double dt) {
  const KStepResult k = k_step(state, macro, ws, dt);
  const LStepResult l = l_step(state, macro, ws, dt);

  BugStepResult out;
  out.micro.X = k.X;
  out.micro.V = l.V;
  out.micro.S = s_step(k.X, l.V, state, macro, ws, dt);
  out.macro = update_macro(macro, first_moment(out.micro), ws, dt);
  out.report.rank = out.micro.rank();
  out.report.x_defect = orthonormality_defect(out.micro.X);
  out.report.v_defect = orthonormality_defect(out.micro.V);
  out.report.dt = dt;
  return out;
}

}  // namespace mmbug
