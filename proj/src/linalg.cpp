#include "mmbug/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmbug {

namespace {

constexpr double kDependentTol = 1e-12;

// Two passes of classical Gram-Schmidt against the first `count` columns of q.
Vector orthogonalize(const Matrix& q, Eigen::Index count, Vector v) {
  for (int pass = 0; pass < 2; ++pass) {
    if (count == 0) break;
    const Vector coeffs = q.leftCols(count).transpose() * v;
    v -= q.leftCols(count) * coeffs;
  }
  return v;
}

}  // namespace

ThinQR orthonormalize(const Matrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index k = std::min(a.cols(), m);
  Matrix q = Matrix::Zero(m, k);

  double max_norm = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) max_norm = std::max(max_norm, a.col(j).norm());
  const double tol = kDependentTol * max_norm;

  for (Eigen::Index j = 0; j < k; ++j) {
    Vector v = orthogonalize(q, j, a.col(j));
    double norm = v.norm();
    if (!(norm > tol) || norm == 0.0) {
      // canonical completion: the e_i with the largest orthogonal remainder
      double best = -1.0;
      Vector best_v;
      for (Eigen::Index i = 0; i < m; ++i) {
        Vector e = Vector::Zero(m);
        e(i) = 1.0;
        Vector r = orthogonalize(q, j, e);
        const double rn = r.norm();
        if (rn > best + 1e-14) {
          best = rn;
          best_v = std::move(r);
        }
      }
      v = orthogonalize(q, j, best_v);
      norm = v.norm();
    }
    q.col(j) = v / norm;
  }

  ThinQR out;
  out.R = q.transpose() * a;
  out.Q = std::move(q);
  return out;
}

double orthonormality_defect(const Matrix& q) {
  if (q.cols() == 0) return 0.0;
  const Matrix gram = q.transpose() * q;
  return (gram - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

Matrix solve_left_spd(const Matrix& m, const Matrix& b) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::logic_error("solve_left_spd: matrix is not positive definite");
  }
  return llt.solve(b);
}

Matrix solve_right_spd(const Matrix& m, const Matrix& b) {
  return solve_left_spd(m, b.transpose()).transpose();
}

}  // namespace mmbug
