/**
 * @file csv.hpp
 * @brief CSV writers; numbers use the shortest round-trip representation.
 */
#pragma once

#include <string>
#include <vector>

#include "mmbug/runner.hpp"

namespace mmbug {

std::string format_double(double value);

/// Header: t,energy,mass,rel_mass_error,rank,dt,cfl_violation
std::string history_csv(const std::vector<HistoryRow>& rows);
/// Header: x,T,Phi,h
std::string profiles_csv(const StaggeredGrid& grid, const MacroState& macro, const Vector& phi);

struct ComparisonRow {
  std::string scheme_a;
  std::string scheme_b;
  double l2_rel_T = 0.0;
  double l2_rel_Phi = 0.0;
};
/// Header: scheme_a,scheme_b,l2_rel_T,l2_rel_Phi
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

/// Writes @p content to @p path; throws std::runtime_error on IO failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mmbug
