#include "oracles.hpp"

#include <cmath>

namespace mmbug::testing {

namespace {

double p1(double x) { return std::sqrt(1.5) * x; }
double p2(double x) { return std::sqrt(5.0 / 8.0) * (3.0 * x * x - 1.0); }

// value at index k, or zero outside [0, n)
double at(const Vector& v, Eigen::Index k) { return k >= 0 && k < v.size() ? v(k) : 0.0; }
double at(const Matrix& m, Eigen::Index k, Eigen::Index col) {
  return k >= 0 && k < m.rows() ? m(k, col) : 0.0;
}

}  // namespace

TwoMomentFlux two_moment_flux() {
  const double nodes[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
  const double weights[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  TwoMomentFlux out{};
  for (int k = 0; k < 3; ++k) {
    const double p[2] = {p1(nodes[k]), p2(nodes[k])};
    const double pos = nodes[k] > 0.0 ? nodes[k] : 0.0;
    const double neg = nodes[k] < 0.0 ? nodes[k] : 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.plus[i][j] += weights[k] * pos * p[i] * p[j];
        out.minus[i][j] += weights[k] * neg * p[i] * p[j];
      }
    }
  }
  return out;
}

Workspace hand_workspace(std::size_t nx, std::size_t n_moments) {
  Workspace ws;
  ws.grid = make_grid(0.0, static_cast<double>(nx), nx);
  ws.sigma = make_absorption(ws.grid, [](double) { return 1.0; });
  ws.angular = build_angular_operators(n_moments);
  return ws;
}

FullOracleResult full_step_oracle(const Vector& T, const Vector& h, const Matrix& g, double dt) {
  // eps = sigma = dx = a = c = c_nu = 1, beta = 1
  const TwoMomentFlux f = two_moment_flux();
  const Eigen::Index nx = T.size();
  const double e = 1.0 / dt;
  const double norm_p1 = std::sqrt(2.0 / 3.0);
  const double alpha = 2.0;

  FullOracleResult out;
  out.g = Matrix::Zero(nx + 1, 2);
  for (Eigen::Index j = 0; j <= nx; ++j) {
    const double dt_t = at(T, j) - at(T, j - 1);
    const double dt_h = at(h, j) - at(h, j - 1);
    const double source = dt_t + dt_h;
    for (int m = 0; m < 2; ++m) {
      double advection = 0.0;
      for (int l = 0; l < 2; ++l) {
        const double back = g(j, l) - at(g, j - 1, l);
        const double fwd = at(g, j + 1, l) - g(j, l);
        advection += f.plus[m][l] * back + f.minus[m][l] * fwd;
      }
      const double b = m == 0 ? norm_p1 : 0.0;
      out.g(j, m) = (e * g(j, m) - advection - b * source) / (e + 1.0);
    }
  }
  out.h = Vector::Zero(nx);
  out.T = Vector::Zero(nx);
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double div = out.g(i + 1, 0) - out.g(i, 0);
    out.h(i) = (e * h(i) - 0.5 * norm_p1 * div) / (e + 1.0 * (1.0 + alpha));
    out.T(i) = T(i) + dt * alpha * out.h(i);
  }
  return out;
}

Vector l_step_rank_one_oracle(const LowRankMicroState& state, const MacroState& macro,
                              const Workspace& ws, double dt) {
  const PhysicalParams& p = ws.params;
  const double e = p.epsilon * p.epsilon / (p.c * dt);
  const double dx = ws.grid.dx;
  const Eigen::Index rows = state.X.rows();
  const Eigen::Index n = state.V.rows();
  const Vector x = state.X.col(0);
  const double s = state.S(0, 0);
  const Vector& T = macro.temperature;
  const Vector& h = macro.h_meso;

  double p_minus = 0.0;
  double p_plus = 0.0;
  double c = 0.0;
  double xs = 0.0;
  for (Eigen::Index j = 0; j < rows; ++j) {
    p_minus += (x(j) - at(x, j - 1)) / dx * x(j);
    p_plus += (at(x, j + 1) - x(j)) / dx * x(j);
    c += ws.sigma.at_interfaces(j) * x(j) * x(j);
    const double source = p.a_rad * p.c * (at(T, j) - at(T, j - 1)) / dx +
                          p.epsilon * p.epsilon * (at(h, j) - at(h, j - 1)) / dx;
    xs += x(j) * source;
  }
  Vector out(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    double ap_l = 0.0;
    double am_l = 0.0;
    for (Eigen::Index l = 0; l < n; ++l) {
      ap_l += ws.angular.A_plus(m, l) * state.V(l, 0) * s;
      am_l += ws.angular.A_minus(m, l) * state.V(l, 0) * s;
    }
    const double rhs = e * state.V(m, 0) * s - p.epsilon * (ap_l * p_minus + am_l * p_plus) -
                       ws.angular.b_vec(m) * xs;
    out(m) = rhs / (e + c);
  }
  return out;
}

Matrix s_step_dense_oracle(const Matrix& x_new, const Matrix& v_new,
                           const LowRankMicroState& state_old, const MacroState& macro,
                           const Workspace& ws, double dt) {
  const PhysicalParams& p = ws.params;
  const double e = p.epsilon * p.epsilon / (p.c * dt);
  const double dx = ws.grid.dx;
  const Matrix s_tilde =
      x_new.transpose() * state_old.X * state_old.S * state_old.V.transpose() * v_new;
  const Matrix g = x_new * s_tilde * v_new.transpose();
  const Eigen::Index rows = g.rows();
  const Eigen::Index n = g.cols();
  const Vector& T = macro.temperature;
  const Vector& h = macro.h_meso;

  Matrix rhs(rows, n);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const double source = p.a_rad * p.c * (at(T, j) - at(T, j - 1)) / dx +
                          p.epsilon * p.epsilon * (at(h, j) - at(h, j - 1)) / dx;
    for (Eigen::Index m = 0; m < n; ++m) {
      double adv = 0.0;
      for (Eigen::Index l = 0; l < n; ++l) {
        adv += ws.angular.A_plus(m, l) * (g(j, l) - at(g, j - 1, l)) / dx +
               ws.angular.A_minus(m, l) * (at(g, j + 1, l) - g(j, l)) / dx;
      }
      rhs(j, m) = e * g(j, m) - p.epsilon * adv - ws.angular.b_vec(m) * source;
    }
  }
  const Matrix projected = x_new.transpose() * rhs * v_new;
  Matrix lhs = Matrix::Zero(x_new.cols(), x_new.cols());
  for (Eigen::Index j = 0; j < rows; ++j) {
    lhs += (e + ws.sigma.at_interfaces(j)) * x_new.row(j).transpose() * x_new.row(j);
  }
  return lhs.partialPivLu().solve(projected);
}

Vector rosseland_oracle(const Vector& T, const Vector& sigma_interfaces, double dx, double dt) {
  // a = c = c_nu = 1 and beta = 1: factor (2/3) / (1 + 2) = 2/9
  const Eigen::Index nx = T.size();
  Vector out(nx);
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double right = (at(T, i + 1) - T(i)) / sigma_interfaces(i + 1);
    const double left = (T(i) - at(T, i - 1)) / sigma_interfaces(i);
    out(i) = T(i) + dt * (2.0 / 9.0) * (right - left) / (dx * dx);
  }
  return out;
}

}  // namespace mmbug::testing
