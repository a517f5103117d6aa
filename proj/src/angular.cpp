#include "mmbug/angular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmbug {

namespace {

struct LegendreEval {
  double value;       // P~_n(x)
  double derivative;  // P~_n'(x)
};

LegendreEval unnormalized_legendre(std::size_t n, double x) {
  double p_prev = 1.0;
  double p = x;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double p_next = ((2.0 * kk + 1.0) * x * p - kk * p_prev) / (kk + 1.0);
    p_prev = p;
    p = p_next;
  }
  const double nn = static_cast<double>(n);
  return {p, nn * (x * p - p_prev) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t count) {
  if (count == 0) throw std::invalid_argument("gauss_legendre: count must be >= 1");

  QuadratureRule rule;
  rule.nodes = Vector::Zero(static_cast<Eigen::Index>(count));
  rule.weights = Vector::Zero(static_cast<Eigen::Index>(count));
  const double n = static_cast<double>(count);
  const std::size_t half = (count + 1) / 2;

  for (std::size_t i = 0; i < half; ++i) {
    // Chebyshev-type guess for the (i+1)-th largest root
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    if (count % 2 == 1 && i + 1 == half) x = 0.0;
    LegendreEval ev = unnormalized_legendre(count, x);
    for (int iter = 0; iter < 100 && x != 0.0; ++iter) {
      const double step = ev.value / ev.derivative;
      x -= step;
      ev = unnormalized_legendre(count, x);
      if (std::abs(step) <= 1e-15) break;
    }
    if (x == 0.0) ev = unnormalized_legendre(count, 0.0);
    const double w = 2.0 / ((1.0 - x * x) * ev.derivative * ev.derivative);
    const auto hi = static_cast<Eigen::Index>(count - 1 - i);
    const auto lo = static_cast<Eigen::Index>(i);
    rule.nodes(hi) = x;
    rule.nodes(lo) = -x;
    rule.weights(hi) = w;
    rule.weights(lo) = w;
  }
  return rule;
}

double recurrence_coefficient(std::size_t k) {
  const double kk = static_cast<double>(k);
  return (kk + 1.0) / std::sqrt((2.0 * kk + 1.0) * (2.0 * kk + 3.0));
}

double legendre_norm(std::size_t k) {
  return std::sqrt(2.0 / (2.0 * static_cast<double>(k) + 1.0));
}

double orthonormal_legendre(std::size_t k, double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::invalid_argument("orthonormal_legendre: |x| must be <= 1");
  }
  // x P_k = a_{k-1} P_{k-1} + a_k P_{k+1}
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < k; ++j) {
    const double a_prev = j == 0 ? 0.0 : recurrence_coefficient(j - 1);
    const double p_next = (x * p - a_prev * p_prev) / recurrence_coefficient(j);
    p_prev = p;
    p = p_next;
  }
  return p;
}

AngularOperators build_angular_operators(std::size_t n_moments) {
  if (n_moments == 0) {
    throw std::invalid_argument("build_angular_operators: n_moments must be >= 1");
  }
  AngularOperators ops;
  ops.n_moments = n_moments;
  ops.quadrature = gauss_legendre(n_moments + 1);
  const auto n = static_cast<Eigen::Index>(n_moments);
  const Eigen::Index q = n + 1;
  const Vector& nodes = ops.quadrature.nodes;
  const Vector& weights = ops.quadrature.weights;

  ops.T_mat.resize(n, q);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < q; ++k) {
      ops.T_mat(i, k) =
          std::sqrt(weights(k)) * orthonormal_legendre(static_cast<std::size_t>(i + 1), nodes(k));
    }
  }

  auto congruence = [&](const Vector& diag) -> Matrix {
    Matrix out = ops.T_mat * diag.asDiagonal() * ops.T_mat.transpose();
    return 0.5 * (out + out.transpose());
  };
  const Vector abs_nodes = nodes.cwiseAbs();
  ops.A = congruence(nodes);
  ops.A_abs = congruence(abs_nodes);
  ops.A_plus = congruence(0.5 * (nodes + abs_nodes));
  ops.A_minus = congruence(0.5 * (nodes - abs_nodes));

  ops.b_vec = Vector::Zero(n);
  ops.b_vec(0) = legendre_norm(1);
  ops.a_vec = ops.b_vec / legendre_norm(0);
  ops.beta_N = weights.maxCoeff() * static_cast<double>(q);
  return ops;
}

}  // namespace mmbug
