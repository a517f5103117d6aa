/**
 * @file config.hpp
 * @brief Flat `key = value` run configuration.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmbug/mesh.hpp"

namespace mmbug {

enum class SchemeKind { Full, BugFixed, BugAdaptive, Rosseland };

std::string scheme_label(SchemeKind scheme);
/// Throws std::invalid_argument for unknown names.
SchemeKind parse_scheme(const std::string& name);
/// Comma-separated list of scheme names.
std::vector<SchemeKind> parse_scheme_list(const std::string& list);

struct RunConfig {
  std::string scenario = "rectangular_pulse";
  SchemeKind scheme = SchemeKind::Full;
  std::optional<std::size_t> nx;
  std::optional<std::size_t> n_moments;
  std::optional<double> epsilon;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> max_rank;
  std::optional<double> theta_rel;
  std::optional<double> t_end;
  std::optional<double> dt;
  double cfl_safety = 1.0;
  std::optional<double> c;
  std::optional<double> a_rad;
  std::optional<double> c_nu;
  std::optional<Emission> emission;
  BoundaryCondition bc = BoundaryCondition::ZeroGhost;
  std::string output_dir = "output";
  std::size_t history_stride = 1;
};

/// Parses `key = value` lines; `#` starts a comment. Throws ConfigError
/// naming the line for unknown keys, unparsable values and violated
/// constraints.
RunConfig parse_config(const std::string& text);

/// Reads and parses a file; throws ConfigError if it cannot be read.
RunConfig load_config(const std::string& path);

}  // namespace mmbug
