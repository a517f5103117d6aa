#include "mmbug/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mmbug/errors.hpp"
#include "mmbug/scenarios.hpp"

namespace mmbug {

std::string scheme_label(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::Full:
      return "full";
    case SchemeKind::BugFixed:
      return "bug_fixed";
    case SchemeKind::BugAdaptive:
      return "bug_adaptive";
    case SchemeKind::Rosseland:
      return "rosseland";
  }
  return "unknown";
}

SchemeKind parse_scheme(const std::string& name) {
  for (SchemeKind s : {SchemeKind::Full, SchemeKind::BugFixed, SchemeKind::BugAdaptive,
                       SchemeKind::Rosseland}) {
    if (scheme_label(s) == name) return s;
  }
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw std::invalid_argument("expected a real number, got '" + v + "'");
  }
  return out;
}

std::size_t to_count(const std::string& v) {
  unsigned long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + v + "'");
  }
  return static_cast<std::size_t>(out);
}

double positive(const std::string& v) {
  const double x = to_double(v);
  if (!(x > 0.0)) throw std::invalid_argument("must be positive, got '" + v + "'");
  return x;
}

std::size_t at_least_one(const std::string& v) {
  const std::size_t n = to_count(v);
  if (n == 0) throw std::invalid_argument("must be >= 1, got '" + v + "'");
  return n;
}

Emission parse_emission(const std::string& v) {
  if (v == "linear") return Emission::Linear;
  if (v == "stefan_boltzmann") return Emission::StefanBoltzmann;
  throw std::invalid_argument("expected linear or stefan_boltzmann, got '" + v + "'");
}

BoundaryCondition parse_bc(const std::string& v) {
  if (v == "zero_ghost") return BoundaryCondition::ZeroGhost;
  if (v == "periodic") return BoundaryCondition::Periodic;
  throw std::invalid_argument("expected zero_ghost or periodic, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"scenario",
       [](RunConfig& c, const std::string& v) {
         scenario_from_name(v);
         c.scenario = v;
       }},
      {"scheme", [](RunConfig& c, const std::string& v) { c.scheme = parse_scheme(v); }},
      {"nx", [](RunConfig& c, const std::string& v) { c.nx = at_least_one(v); }},
      {"n_moments", [](RunConfig& c, const std::string& v) { c.n_moments = at_least_one(v); }},
      {"epsilon", [](RunConfig& c, const std::string& v) { c.epsilon = positive(v); }},
      {"rank", [](RunConfig& c, const std::string& v) { c.rank = at_least_one(v); }},
      {"max_rank", [](RunConfig& c, const std::string& v) { c.max_rank = at_least_one(v); }},
      {"theta_rel",
       [](RunConfig& c, const std::string& v) {
         const double x = to_double(v);
         if (x < 0.0) throw std::invalid_argument("must be nonnegative, got '" + v + "'");
         c.theta_rel = x;
       }},
      {"t_end", [](RunConfig& c, const std::string& v) { c.t_end = positive(v); }},
      {"dt", [](RunConfig& c, const std::string& v) { c.dt = positive(v); }},
      {"cfl_safety", [](RunConfig& c, const std::string& v) { c.cfl_safety = positive(v); }},
      {"c", [](RunConfig& c, const std::string& v) { c.c = positive(v); }},
      {"a_rad", [](RunConfig& c, const std::string& v) { c.a_rad = positive(v); }},
      {"c_nu", [](RunConfig& c, const std::string& v) { c.c_nu = positive(v); }},
      {"emission", [](RunConfig& c, const std::string& v) { c.emission = parse_emission(v); }},
      {"bc", [](RunConfig& c, const std::string& v) { c.bc = parse_bc(v); }},
      {"output_dir",
       [](RunConfig& c, const std::string& v) {
         if (v.empty()) throw std::invalid_argument("must not be empty");
         c.output_dir = v;
       }},
      {"history_stride",
       [](RunConfig& c, const std::string& v) { c.history_stride = at_least_one(v); }},
  };
  return table;
}

}  // namespace

std::vector<SchemeKind> parse_scheme_list(const std::string& list) {
  std::vector<SchemeKind> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in scheme list '" + list + "'");
    const SchemeKind scheme = parse_scheme(item);
    if (std::find(out.begin(), out.end(), scheme) != out.end()) {
      throw std::invalid_argument("scheme '" + item + "' listed twice");
    }
    out.push_back(scheme);
  }
  if (out.empty()) throw std::invalid_argument("empty scheme list");
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + msg);
    };
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected `key = value`, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) fail("unknown key `" + key + "`");
    if (!seen.insert(key).second) fail("duplicate key `" + key + "`");
    try {
      it->second(config, value);
    } catch (const std::invalid_argument& e) {
      fail("invalid value for `" + key + "`: " + e.what());
    }
  }
  if (config.rank && config.scheme == SchemeKind::BugFixed && config.n_moments &&
      *config.rank > *config.n_moments) {
    throw ConfigError("`rank` exceeds `n_moments`");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace mmbug
