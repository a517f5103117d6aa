/**
 * @file errors.hpp
 * @brief Exception types raised by the solver library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace mmbug {

/// Raised when a solver state holds non-finite values or inconsistent shapes.
class InvalidState : public std::runtime_error {
 public:
  explicit InvalidState(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the config parser; the message names the offending line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mmbug
