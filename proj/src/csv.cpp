#include "mmbug/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace mmbug {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string history_csv(const std::vector<HistoryRow>& rows) {
  std::string out = "t,energy,mass,rel_mass_error,rank,dt,cfl_violation\n";
  for (const HistoryRow& row : rows) {
    const DiagnosticsRecord& r = row.record;
    out += format_double(r.time) + ',' + format_double(r.energy) + ',' + format_double(r.mass) +
           ',' + format_double(r.rel_mass_error) + ',' + std::to_string(r.rank) + ',' +
           format_double(r.dt) + ',' + (row.cfl_violation ? '1' : '0') + '\n';
  }
  return out;
}

std::string profiles_csv(const StaggeredGrid& grid, const MacroState& macro, const Vector& phi) {
  std::string out = "x,T,Phi,h\n";
  for (Eigen::Index i = 0; i < grid.centers.size(); ++i) {
    out += format_double(grid.centers(i)) + ',' + format_double(macro.temperature(i)) + ',' +
           format_double(phi(i)) + ',' + format_double(macro.h_meso(i)) + '\n';
  }
  return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "scheme_a,scheme_b,l2_rel_T,l2_rel_Phi\n";
  for (const ComparisonRow& row : rows) {
    out += row.scheme_a + ',' + row.scheme_b + ',' + format_double(row.l2_rel_T) + ',' +
           format_double(row.l2_rel_Phi) + '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace mmbug
