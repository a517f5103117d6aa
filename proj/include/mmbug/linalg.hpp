/**
 * @file linalg.hpp
 * @brief Small dense linear-algebra helpers shared by the low-rank integrators.
 */
#pragma once

#include <Eigen/Dense>

namespace mmbug {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Thin QR factorization A = Q R with a guaranteed orthonormal Q.
struct ThinQR {
  Matrix Q;  ///< rows(A) x k, orthonormal columns
  Matrix R;  ///< k x cols(A), R = Q^T A
};

/**
 * Orthonormal basis of the columns of @p a, keeping their order.
 *
 * Classical Gram-Schmidt with one reorthogonalization pass. A column whose
 * remaining norm is at most 1e-12 times the largest column norm is replaced
 * by the canonical basis vector with the largest component orthogonal to the
 * accepted columns, so the result always has
 * k = min(cols(A), rows(A)) orthonormal columns. Columns past k are only
 * used to form R (they lie in the span once k = rows(A)).
 */
ThinQR orthonormalize(const Matrix& a);

/// max |Q^T Q - I| entrywise.
double orthonormality_defect(const Matrix& q);

/// Symmetric positive definite solve of X * M = B (M symmetric), returning X.
Matrix solve_right_spd(const Matrix& m, const Matrix& b);

/// Symmetric positive definite solve M * X = B.
Matrix solve_left_spd(const Matrix& m, const Matrix& b);

}  // namespace mmbug
