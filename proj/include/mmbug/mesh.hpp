/**
 * @file mesh.hpp
 * @brief Staggered grid, absorption field, solution containers and the
 *        finite-difference operators of the macro-micro scheme.
 *
 * Index conventions (0-based): centers i = 0..Nx-1, interfaces j = 0..Nx.
 * Center i lies between interfaces i and i+1; interface j lies between
 * centers j-1 and j. Spatial data is stored row-wise, so a micro field is a
 * (Nx+1) x N matrix whose row j holds the N moments at interface j.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "mmbug/angular.hpp"
#include "mmbug/linalg.hpp"

namespace mmbug {

enum class Emission { Linear, StefanBoltzmann };

enum class BoundaryCondition { ZeroGhost, Periodic };

/// Physical constants of the scaled gray equations.
struct PhysicalParams {
  double epsilon = 1.0;
  double c = 1.0;
  double a_rad = 1.0;
  double c_nu = 1.0;
  Emission emission = Emission::Linear;

  [[nodiscard]] double alpha() const { return 2.0 / c_nu; }
  /// Emission B(T): a c T (Linear) or a c T^4 (StefanBoltzmann).
  [[nodiscard]] double planck(double temperature) const;
  /// Throws std::invalid_argument unless every constant is finite and > 0.
  void validate() const;
};

struct StaggeredGrid {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 1;
  double dx = 1.0;
  Vector centers;     ///< Nx
  Vector interfaces;  ///< Nx + 1

  [[nodiscard]] std::size_t n_interfaces() const { return n_cells + 1; }
};

StaggeredGrid make_grid(double x_min, double x_max, std::size_t n_cells);

struct AbsorptionField {
  Vector at_centers;
  Vector at_interfaces;
  double sigma_min = 0.0;
};

/// Samples sigma(x) directly at centers and interfaces.
AbsorptionField make_absorption(const StaggeredGrid& grid,
                                const std::function<double(double)>& sigma);
/// Interface values are arithmetic means of the adjacent centers; the two
/// boundary interfaces copy their single neighbor.
AbsorptionField make_absorption_from_centers(const StaggeredGrid& grid,
                                             const Vector& at_centers);

struct MacroState {
  Vector temperature;  ///< T at centers
  Vector h_meso;       ///< h at centers
};

struct FullMicroState {
  Matrix g;  ///< (Nx+1) x N, moments 1..N per interface
};

/// g = X S V^T with orthonormal X, V.
struct LowRankMicroState {
  Matrix X;  ///< (Nx+1) x r
  Matrix S;  ///< r x r
  Matrix V;  ///< N x r

  [[nodiscard]] std::size_t rank() const { return static_cast<std::size_t>(S.rows()); }
  [[nodiscard]] Matrix reconstruct() const { return X * S * V.transpose(); }
};

/// Zero micro state in factored form: X spans the constant vector first,
/// V spans e_1 first, S = 0.
LowRankMicroState zero_low_rank(std::size_t n_interfaces, std::size_t n_moments,
                                std::size_t rank = 1);

/// Rank-r factorization of a dense micro field via truncated SVD.
LowRankMicroState low_rank_from_dense(const Matrix& g, std::size_t rank);

enum class DiffKind {
  DPlus,                ///< interfaces -> interfaces, (u_{j+1} - u_j) / dx
  DMinus,               ///< interfaces -> interfaces, (u_j - u_{j-1}) / dx
  DZeroCenters,         ///< interfaces -> centers, (u_{i+1} - u_i) / dx
  DeltaZeroInterfaces,  ///< centers -> interfaces, (u_j - u_{j-1}) / dx
};

/// Applies a difference operator to each column of @p values. Ghost values
/// are zero (ZeroGhost) or wrapped around the input array (Periodic).
/// Throws std::invalid_argument when the row count does not match @p kind.
Matrix apply_diff(DiffKind kind, const Matrix& values, const StaggeredGrid& grid,
                  BoundaryCondition bc = BoundaryCondition::ZeroGhost);
Vector apply_diff(DiffKind kind, const Vector& values, const StaggeredGrid& grid,
                  BoundaryCondition bc = BoundaryCondition::ZeroGhost);

/// Macro and micro data recovered from a kinetic density f(x, mu) through
/// the macro-micro relations, with moments taken by @p quad (N = count - 1).
std::pair<MacroState, FullMicroState> init_from_kinetic(
    const std::function<double(double, double)>& f_sampler,
    const std::function<double(double)>& initial_temperature, const StaggeredGrid& grid,
    const PhysicalParams& params, const QuadratureRule& quad);

/// Phi = B(T) + eps^2 h at centers.
Vector scalar_flux(const MacroState& macro, const PhysicalParams& params);

/// beta = dB/dT / (a c): 4 T^3 for Stefan-Boltzmann, 1 for linear emission.
double beta_of_T(double temperature, Emission emission);

struct BetaFields {
  Vector centers;     ///< Nx
  Vector interfaces;  ///< Nx + 1, mean of the adjacent centers
};

/// Boundary interfaces use a ghost temperature of 0 (ZeroGhost) or wrap.
BetaFields beta_fields(const MacroState& macro, Emission emission,
                       BoundaryCondition bc = BoundaryCondition::ZeroGhost);

}  // namespace mmbug
