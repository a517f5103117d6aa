#include "mmbug/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mmbug {

double PhysicalParams::planck(double temperature) const {
  if (emission == Emission::StefanBoltzmann) {
    const double t2 = temperature * temperature;
    return a_rad * c * t2 * t2;
  }
  return a_rad * c * temperature;
}

void PhysicalParams::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument(std::string("PhysicalParams: ") + name +
                                  " must be finite and positive");
    }
  };
  check(epsilon, "epsilon");
  check(c, "c");
  check(a_rad, "a_rad");
  check(c_nu, "c_nu");
}

StaggeredGrid make_grid(double x_min, double x_max, std::size_t n_cells) {
  if (n_cells == 0) throw std::invalid_argument("make_grid: n_cells must be >= 1");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("make_grid: need finite x_min < x_max");
  }
  StaggeredGrid grid;
  grid.x_min = x_min;
  grid.x_max = x_max;
  grid.n_cells = n_cells;
  grid.dx = (x_max - x_min) / static_cast<double>(n_cells);
  const auto n = static_cast<Eigen::Index>(n_cells);
  grid.interfaces.resize(n + 1);
  grid.centers.resize(n);
  for (Eigen::Index j = 0; j <= n; ++j) {
    grid.interfaces(j) = x_min + static_cast<double>(j) * grid.dx;
  }
  grid.interfaces(n) = x_max;
  for (Eigen::Index i = 0; i < n; ++i) {
    grid.centers(i) = 0.5 * (grid.interfaces(i) + grid.interfaces(i + 1));
  }
  return grid;
}

namespace {

AbsorptionField finish_absorption(AbsorptionField field) {
  field.sigma_min = std::min(field.at_centers.minCoeff(), field.at_interfaces.minCoeff());
  if (!field.at_centers.allFinite() || !field.at_interfaces.allFinite() ||
      !(field.sigma_min > 0.0)) {
    throw std::invalid_argument("absorption must be finite and strictly positive");
  }
  return field;
}

}  // namespace

AbsorptionField make_absorption(const StaggeredGrid& grid,
                                const std::function<double(double)>& sigma) {
  AbsorptionField field;
  field.at_centers = grid.centers.unaryExpr(sigma);
  field.at_interfaces = grid.interfaces.unaryExpr(sigma);
  return finish_absorption(std::move(field));
}

AbsorptionField make_absorption_from_centers(const StaggeredGrid& grid,
                                             const Vector& at_centers) {
  const auto n = static_cast<Eigen::Index>(grid.n_cells);
  if (at_centers.size() != n) {
    throw std::invalid_argument("make_absorption_from_centers: length must equal n_cells");
  }
  AbsorptionField field;
  field.at_centers = at_centers;
  field.at_interfaces.resize(n + 1);
  field.at_interfaces(0) = at_centers(0);
  field.at_interfaces(n) = at_centers(n - 1);
  for (Eigen::Index j = 1; j < n; ++j) {
    field.at_interfaces(j) = 0.5 * (at_centers(j - 1) + at_centers(j));
  }
  return finish_absorption(std::move(field));
}

LowRankMicroState zero_low_rank(std::size_t n_interfaces, std::size_t n_moments,
                                std::size_t rank) {
  if (rank == 0 || rank > n_interfaces || rank > n_moments) {
    throw std::invalid_argument("zero_low_rank: need 1 <= rank <= min(Nx+1, N)");
  }
  const auto m = static_cast<Eigen::Index>(n_interfaces);
  const auto n = static_cast<Eigen::Index>(n_moments);
  const auto r = static_cast<Eigen::Index>(rank);
  Matrix x_seed = Matrix::Zero(m, r);
  x_seed.col(0).setOnes();
  Matrix v_seed = Matrix::Zero(n, r);
  v_seed(0, 0) = 1.0;
  LowRankMicroState state;
  state.X = orthonormalize(x_seed).Q;
  state.V = orthonormalize(v_seed).Q;
  state.S = Matrix::Zero(r, r);
  return state;
}

LowRankMicroState low_rank_from_dense(const Matrix& g, std::size_t rank) {
  const auto r = static_cast<Eigen::Index>(rank);
  if (rank == 0 || r > std::min(g.rows(), g.cols())) {
    throw std::invalid_argument("low_rank_from_dense: need 1 <= rank <= min(rows, cols)");
  }
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
  LowRankMicroState state;
  state.X = svd.matrixU().leftCols(r);
  state.V = svd.matrixV().leftCols(r);
  state.S = svd.singularValues().head(r).asDiagonal();
  return state;
}

namespace {

Eigen::Index expected_rows(DiffKind kind, Eigen::Index nx) {
  return kind == DiffKind::DeltaZeroInterfaces ? nx : nx + 1;
}

}  // namespace

Matrix apply_diff(DiffKind kind, const Matrix& values, const StaggeredGrid& grid,
                  BoundaryCondition bc) {
  const auto nx = static_cast<Eigen::Index>(grid.n_cells);
  const Eigen::Index rows = values.rows();
  if (rows != expected_rows(kind, nx)) {
    throw std::invalid_argument("apply_diff: row count does not match the operator");
  }
  const double inv_dx = 1.0 / grid.dx;
  const bool periodic = bc == BoundaryCondition::Periodic;
  const Eigen::Index cols = values.cols();
  const Matrix zero_row = Matrix::Zero(1, cols);
  // ghost rows just outside the input array
  const Matrix before = periodic ? Matrix(values.bottomRows(1)) : zero_row;
  const Matrix after = periodic ? Matrix(values.topRows(1)) : zero_row;

  const Eigen::Index out_rows = kind == DiffKind::DZeroCenters ? nx : nx + 1;
  Matrix out(out_rows, cols);
  switch (kind) {
    case DiffKind::DPlus:
      out.topRows(rows - 1) = values.bottomRows(rows - 1) - values.topRows(rows - 1);
      out.row(rows - 1) = after - values.row(rows - 1);
      break;
    case DiffKind::DMinus:
      out.row(0) = values.row(0) - before;
      out.bottomRows(rows - 1) = values.bottomRows(rows - 1) - values.topRows(rows - 1);
      break;
    case DiffKind::DZeroCenters:
      out = values.bottomRows(nx) - values.topRows(nx);
      break;
    case DiffKind::DeltaZeroInterfaces:
      out.row(0) = values.row(0) - before;
      out.middleRows(1, nx - 1) = values.bottomRows(nx - 1) - values.topRows(nx - 1);
      out.row(nx) = after - values.row(nx - 1);
      break;
  }
  out *= inv_dx;
  return out;
}

Vector apply_diff(DiffKind kind, const Vector& values, const StaggeredGrid& grid,
                  BoundaryCondition bc) {
  const Matrix as_matrix = values;
  return apply_diff(kind, as_matrix, grid, bc).col(0);
}

std::pair<MacroState, FullMicroState> init_from_kinetic(
    const std::function<double(double, double)>& f_sampler,
    const std::function<double(double)>& initial_temperature, const StaggeredGrid& grid,
    const PhysicalParams& params, const QuadratureRule& quad) {
  params.validate();
  if (quad.count() < 2) {
    throw std::invalid_argument("init_from_kinetic: need at least two quadrature nodes");
  }
  const auto nx = static_cast<Eigen::Index>(grid.n_cells);
  const auto q = static_cast<Eigen::Index>(quad.count());
  const Eigen::Index n_moments = q - 1;
  const double eps = params.epsilon;

  Matrix legendre(q, n_moments);
  for (Eigen::Index k = 0; k < q; ++k) {
    for (Eigen::Index m = 0; m < n_moments; ++m) {
      legendre(k, m) = orthonormal_legendre(static_cast<std::size_t>(m + 1), quad.nodes(k));
    }
  }

  // deviation f - B(T0) at the quadrature nodes
  auto deviation = [&](double x) {
    const double b = params.planck(initial_temperature(x));
    Vector dev(q);
    for (Eigen::Index k = 0; k < q; ++k) dev(k) = f_sampler(x, quad.nodes(k)) - b;
    return dev;
  };

  MacroState macro;
  macro.temperature.resize(nx);
  macro.h_meso.resize(nx);
  for (Eigen::Index i = 0; i < nx; ++i) {
    const double x = grid.centers(i);
    macro.temperature(i) = initial_temperature(x);
    macro.h_meso(i) = 0.5 * quad.weights.dot(deviation(x)) / (eps * eps);
  }

  FullMicroState micro;
  micro.g.resize(nx + 1, n_moments);
  for (Eigen::Index j = 0; j <= nx; ++j) {
    Vector dev = deviation(grid.interfaces(j));
    dev.array() -= 0.5 * quad.weights.dot(dev);
    micro.g.row(j) = (legendre.transpose() * quad.weights.cwiseProduct(dev)).transpose() / eps;
  }
  return {std::move(macro), std::move(micro)};
}

Vector scalar_flux(const MacroState& macro, const PhysicalParams& params) {
  Vector phi(macro.temperature.size());
  const double eps2 = params.epsilon * params.epsilon;
  for (Eigen::Index i = 0; i < phi.size(); ++i) {
    phi(i) = params.planck(macro.temperature(i)) + eps2 * macro.h_meso(i);
  }
  return phi;
}

double beta_of_T(double temperature, Emission emission) {
  if (emission == Emission::Linear) return 1.0;
  return 4.0 * temperature * temperature * temperature;
}

BetaFields beta_fields(const MacroState& macro, Emission emission, BoundaryCondition bc) {
  const Eigen::Index nx = macro.temperature.size();
  BetaFields out;
  if (emission == Emission::Linear) {
    out.centers = Vector::Ones(nx);
    out.interfaces = Vector::Ones(nx + 1);
    return out;
  }
  out.centers = macro.temperature.unaryExpr([&](double t) { return beta_of_T(t, emission); });
  out.interfaces.resize(nx + 1);
  const bool periodic = bc == BoundaryCondition::Periodic;
  auto at = [&](Eigen::Index i) -> double {
    if (i >= 0 && i < nx) return out.centers(i);
    if (periodic) return out.centers((i + nx) % nx);
    return beta_of_T(0.0, emission);
  };
  for (Eigen::Index j = 0; j <= nx; ++j) out.interfaces(j) = 0.5 * (at(j - 1) + at(j));
  return out;
}

}  // namespace mmbug
