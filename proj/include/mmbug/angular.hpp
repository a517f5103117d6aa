/**
 * @file angular.hpp
 * @brief Legendre moments, Gauss-Legendre quadrature and the P_N flux matrices.
 */
#pragma once

#include <cstddef>

#include "mmbug/linalg.hpp"

namespace mmbug {

/// Gauss-Legendre rule on [-1, 1], nodes strictly increasing.
struct QuadratureRule {
  Vector nodes;
  Vector weights;

  [[nodiscard]] std::size_t count() const { return static_cast<std::size_t>(nodes.size()); }
};

/// Throws std::invalid_argument for count == 0.
QuadratureRule gauss_legendre(std::size_t count);

/// Orthonormal Legendre polynomial P_k(x) = P~_k(x) / ||P~_k||.
/// Throws std::invalid_argument for |x| > 1.
double orthonormal_legendre(std::size_t k, double x);

/// Recurrence coefficient a_k = (k+1) / sqrt((2k+1)(2k+3)).
double recurrence_coefficient(std::size_t k);

/// L2([-1,1]) norm of the unnormalized Legendre polynomial, sqrt(2/(2k+1)).
double legendre_norm(std::size_t k);

/**
 * Angular operators of the N-moment system for the micro variable
 * (moments 1..N; the zeroth moment is absent).
 *
 * The flux matrix and its splitting are built from the (N+1)-point
 * Gauss-Legendre rule through A = T M T^T with M = diag(nodes).
 */
struct AngularOperators {
  std::size_t n_moments = 0;
  QuadratureRule quadrature;
  Matrix A;        ///< flux matrix, symmetric tridiagonal
  Matrix A_plus;   ///< 1/2 T (M + |M|) T^T
  Matrix A_minus;  ///< 1/2 T (M - |M|) T^T
  Matrix A_abs;    ///< T |M| T^T
  Matrix T_mat;    ///< N x (N+1), T_ik = sqrt(w_k) P_i(node_k)
  Vector b_vec;    ///< (||P~_1||, 0, ..., 0)
  Vector a_vec;    ///< b_vec / ||P~_0||
  double beta_N = 0.0;  ///< max_k w_k (N+1)
};

/// Throws std::invalid_argument for n_moments == 0.
AngularOperators build_angular_operators(std::size_t n_moments);

}  // namespace mmbug
