#include "mmbug/full_scheme.hpp"

#include <stdexcept>

#include "mmbug/errors.hpp"

namespace mmbug {

Matrix full_micro_update(const MacroState& macro, const FullMicroState& micro,
                         const Workspace& ws, double dt) {
  check_step_inputs(macro, ws, dt);
  const auto rows = static_cast<Eigen::Index>(ws.n_interfaces());
  const auto n = static_cast<Eigen::Index>(ws.n_moments());
  if (micro.g.rows() != rows || micro.g.cols() != n) {
    throw InvalidState("micro state shape does not match the workspace");
  }
  if (!micro.g.allFinite()) throw InvalidState("micro state holds non-finite values");

  const PhysicalParams& p = ws.params;
  const double e = p.epsilon * p.epsilon / (p.c * dt);
  const AngularOperators& ang = ws.angular;
  const Matrix dm = apply_diff(DiffKind::DMinus, micro.g, ws.grid, ws.bc);
  const Matrix dp = apply_diff(DiffKind::DPlus, micro.g, ws.grid, ws.bc);
  const Vector source = interface_source(macro, ws);

  Matrix rhs = e * micro.g - p.epsilon * (dm * ang.A_plus + dp * ang.A_minus) -
               source * ang.b_vec.transpose();
  return interface_denominator(ws, dt).cwiseInverse().asDiagonal() * rhs;
}

FullStepResult step_full(const MacroState& macro, const FullMicroState& micro,
                         const Workspace& ws, double dt) {
  FullStepResult out;
  out.micro.g = full_micro_update(macro, micro, ws, dt);
  out.macro = update_macro(macro, out.micro.g.col(0), ws, dt);
  return out;
}

}  // namespace mmbug
