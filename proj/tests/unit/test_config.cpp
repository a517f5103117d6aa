#include <doctest.h>

#include <string>

#include "mmbug/config.hpp"
#include "mmbug/errors.hpp"

using namespace mmbug;

TEST_CASE("kinetic pulse config uses defaults") {
  const RunConfig cfg =
      parse_config("scenario = rectangular_pulse\nscheme = bug_adaptive\nepsilon = 1.0\n");
  CHECK(cfg.scenario == "rectangular_pulse");
  CHECK(cfg.scheme == SchemeKind::BugAdaptive);
  CHECK(cfg.epsilon == 1.0);
  CHECK_FALSE(cfg.nx.has_value());
  CHECK_FALSE(cfg.dt.has_value());
  CHECK(cfg.cfl_safety == 1.0);
  CHECK(cfg.bc == BoundaryCondition::ZeroGhost);
  CHECK(cfg.history_stride == 1);
}

TEST_CASE("fixed rank request") {
  const RunConfig cfg = parse_config("scheme = bug_fixed\nrank = 15");
  CHECK(cfg.scheme == SchemeKind::BugFixed);
  CHECK(cfg.rank == 15u);
}

TEST_CASE("every key parses") {
  const RunConfig cfg = parse_config(
      "# full listing\n"
      "scenario = absorber\n"
      "scheme = rosseland   # trailing comment\n"
      "nx = 64\n"
      "n_moments = 12\n"
      "epsilon = 1e-5\n"
      "rank = 2\n"
      "max_rank = 6\n"
      "theta_rel = 0.01\n"
      "t_end = 0.25\n"
      "dt = 1e-3\n"
      "cfl_safety = 0.5\n"
      "c = 2\n"
      "a_rad = 0.5\n"
      "c_nu = 3\n"
      "emission = stefan_boltzmann\n"
      "bc = periodic\n"
      "output_dir = out/run\n"
      "\n"
      "history_stride = 10\n");
  CHECK(cfg.scenario == "absorber");
  CHECK(cfg.scheme == SchemeKind::Rosseland);
  CHECK(cfg.nx == 64u);
  CHECK(cfg.n_moments == 12u);
  CHECK(cfg.epsilon == 1e-5);
  CHECK(cfg.max_rank == 6u);
  CHECK(cfg.theta_rel == 0.01);
  CHECK(cfg.t_end == 0.25);
  CHECK(cfg.dt == 1e-3);
  CHECK(cfg.cfl_safety == 0.5);
  CHECK(cfg.c == 2.0);
  CHECK(cfg.a_rad == 0.5);
  CHECK(cfg.c_nu == 3.0);
  CHECK(cfg.emission == Emission::StefanBoltzmann);
  CHECK(cfg.bc == BoundaryCondition::Periodic);
  CHECK(cfg.output_dir == "out/run");
  CHECK(cfg.history_stride == 10u);
}

TEST_CASE("invalid configs name the offending line and key") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const std::string neg = message("epsilon = -1");
  CHECK(neg.find("epsilon") != std::string::npos);
  CHECK(neg.find("line 1") != std::string::npos);
  CHECK(message("nx = 10\nfoo = 1").find("line 2") != std::string::npos);
  CHECK_FALSE(message("nx = 10\nnx = 12").empty());
  CHECK_FALSE(message("nx = ten").empty());
  CHECK_FALSE(message("nx = 10.5").empty());
  CHECK_FALSE(message("nx = 0").empty());
  CHECK_FALSE(message("scheme = implicit").empty());
  CHECK_FALSE(message("dt = 0").empty());
  CHECK_FALSE(message("emission = quadratic").empty());
  CHECK_FALSE(message("just words").empty());
  CHECK_FALSE(message("theta_rel = nan").empty());
}

TEST_CASE("scheme lists") {
  const auto all = parse_scheme_list("full,bug_fixed,bug_adaptive,rosseland");
  REQUIRE(all.size() == 4);
  CHECK(all[3] == SchemeKind::Rosseland);
  CHECK(scheme_label(SchemeKind::BugFixed) == "bug_fixed");
  CHECK_THROWS(parse_scheme_list("full,,rosseland"));
  CHECK_THROWS(parse_scheme_list("full,full"));
  CHECK_THROWS(parse_scheme_list(""));
  CHECK_THROWS(parse_scheme("bug"));
}

TEST_CASE("missing config file") {
  CHECK_THROWS_AS(load_config("/nonexistent/dir/run.cfg"), ConfigError);
}
