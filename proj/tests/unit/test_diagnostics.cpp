#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mmbug/diagnostics.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace mmbug;

TEST_CASE("time-step bound for the kinetic pulse setup") {
  PhysicalParams params;
  const StaggeredGrid grid = make_grid(-10.0, 10.0, 501);
  const AngularOperators ops = build_angular_operators(100);
  const AbsorptionField sigma = make_absorption(grid, [](double) { return 0.5; });
  const CflBound bound = compute_cfl_bound(params, grid, ops, sigma);
  CHECK(std::abs(bound.dt - 0.005) <= 0.0005);
  CHECK(std::abs(bound.node + 0.999719) <= 1e-6);
  CHECK(compute_cfl_dt(params, grid, ops, sigma) == bound.dt);
}

TEST_CASE("time-step bound formula specializations") {
  const StaggeredGrid grid = make_grid(0.0, 1.0, 10);
  const AbsorptionField sigma = make_absorption(grid, [](double) { return 2.0; });

  PhysicalParams parabolic;
  parabolic.epsilon = 0.0;
  const AngularOperators ops = build_angular_operators(4);
  double expected = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < ops.quadrature.nodes.size(); ++k) {
    const double mu = ops.quadrature.nodes(k);
    if (mu == 0.0) continue;
    expected = std::min(expected, 2.0 * grid.dx * grid.dx / (5.0 * ops.beta_N * mu * mu));
  }
  CHECK(std::abs(compute_cfl_dt(parabolic, grid, ops, sigma) - expected) <= 1e-15 * expected);

  // one moment: nodes +-1/sqrt(3), unit weights, beta_N = 2
  PhysicalParams params;
  params.epsilon = 0.5;
  const AngularOperators one = build_angular_operators(1);
  const double mu = 1.0 / std::sqrt(3.0);
  const double want = (2.0 * 0.5 * grid.dx / mu + 2.0 * grid.dx * grid.dx / (mu * mu)) / 10.0;
  CHECK(std::abs(compute_cfl_dt(params, grid, one, sigma) - want) <= 1e-14 * want);
}

TEST_CASE("time-step bound shrinks with resolution") {
  PhysicalParams params;
  const AngularOperators ops = build_angular_operators(10);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t nx : {20, 40, 80, 160}) {
    const StaggeredGrid grid = make_grid(0.0, 1.0, nx);
    const double dt = compute_cfl_dt(params, grid, ops, make_absorption(grid, [](double) { return 1.0; }));
    CHECK(dt < prev);
    prev = dt;
  }
}

TEST_CASE("energy and mass of constant fields") {
  PhysicalParams params;
  const StaggeredGrid grid = make_grid(-10.0, 10.0, 50);
  const MacroState zero{Vector::Zero(50), Vector::Zero(50)};
  CHECK(energy(zero, 0.0, params, grid) == 0.0);
  const MacroState ones{Vector::Ones(50), Vector::Zero(50)};
  CHECK(std::abs(energy(ones, 0.0, params, grid) - 30.0) <= 1e-12);
  CHECK(std::abs(mass(ones, params, grid) - 30.0) <= 1e-12);
}

TEST_CASE("micro norms agree between dense and factored forms") {
  testing::Rng rng(31);
  const StaggeredGrid grid = make_grid(0.0, 2.0, 12);
  const LowRankMicroState lr{testing::random_orthonormal(rng, 13, 3),
                             testing::random_matrix(rng, 3, 3),
                             testing::random_orthonormal(rng, 6, 3)};
  CHECK(std::abs(micro_norm_sq(lr, grid) - micro_norm_sq(FullMicroState{lr.reconstruct()}, grid)) <=
        1e-12 * micro_norm_sq(lr, grid));
}

TEST_CASE("relative mass error") {
  CHECK(relative_mass_error(0.0, 0.0) == 0.0);
  CHECK(relative_mass_error(1.5, 1.0) == doctest::Approx(0.5));
  CHECK(relative_mass_error(-1.0, -2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(relative_mass_error(1.0, 0.0), std::domain_error);
}

TEST_CASE("Rosseland step") {
  PhysicalParams params;
  const StaggeredGrid grid = make_grid(0.0, 1.0, 10);
  const AbsorptionField sigma = make_absorption(grid, [](double) { return 2.0; });
  const Vector uniform = Vector::Constant(10, 4.0);
  CHECK((rosseland_step(uniform, params, grid, sigma, 0.001, BoundaryCondition::Periodic).array() -
         4.0)
            .abs()
            .maxCoeff() <= 1e-14);

  // constant sigma and linear emission: explicit heat equation
  Vector t(10);
  for (Eigen::Index i = 0; i < 10; ++i) t(i) = std::sin(0.7 * static_cast<double>(i));
  const double dt = 1e-4;
  const double a = params.a_rad, c = params.c, cnu = params.c_nu;
  const double kappa = 2.0 * a * c / (3.0 * cnu * 2.0 * (1.0 + 2.0 * a / cnu));
  const Vector got = rosseland_step(t, params, grid, sigma, dt, BoundaryCondition::Periodic);
  for (Eigen::Index i = 0; i < 10; ++i) {
    const double lap = (t((i + 1) % 10) - 2.0 * t(i) + t((i + 9) % 10)) / (grid.dx * grid.dx);
    CHECK(std::abs(got(i) - (t(i) + dt * kappa * lap)) <= 1e-14);
  }

  const auto ws = testing::hand_workspace(3, 1);
  const Vector bump = Vector::Unit(3, 1);
  CHECK((rosseland_step(bump, ws.params, ws.grid, ws.sigma, 0.1) -
         testing::rosseland_oracle(bump, ws.sigma.at_interfaces, 1.0, 0.1))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
}

TEST_CASE("relative L2 difference") {
  const StaggeredGrid grid = make_grid(0.0, 1.0, 4);
  const Vector v = (Vector(4) << 1, -2, 3, 0.5).finished();
  CHECK(l2_relative_difference(v, v, grid) == 0.0);
  CHECK(l2_relative_difference(Vector::Zero(4), Vector::Zero(4), grid) == 0.0);
  CHECK(std::abs(l2_relative_difference(2.0 * v, v, grid) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(l2_relative_difference(Vector::Zero(3), v, grid), std::invalid_argument);
}

TEST_CASE("Rosseland step conserves weighted mass under periodic ghosts") {
  PhysicalParams params;
  params.a_rad = 0.7;
  params.c_nu = 1.3;
  const StaggeredGrid grid = make_grid(-1.0, 1.0, 25);
  const AbsorptionField sigma = make_absorption(grid, [](double) { return 1.5; });
  testing::Rng rng(33);
  Vector t = testing::random_vector(rng, 25).cwiseAbs();
  const double m0 = mass(MacroState{t, Vector::Zero(25)}, params, grid);
  for (int n = 0; n < 20; ++n) {
    t = rosseland_step(t, params, grid, sigma, 1e-4, BoundaryCondition::Periodic);
  }
  CHECK(relative_mass_error(mass(MacroState{t, Vector::Zero(25)}, params, grid), m0) <= 1e-12);
}
