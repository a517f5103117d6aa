/**
 * @file full_scheme.hpp
 * @brief Forward-backward Euler modal macro-micro scheme on the full P_N system.
 */
#pragma once

#include "mmbug/workspace.hpp"

namespace mmbug {

struct FullStepResult {
  MacroState macro;
  FullMicroState micro;
};

/// g-update of one step (transport explicit, absorption implicit).
Matrix full_micro_update(const MacroState& macro, const FullMicroState& micro,
                         const Workspace& ws, double dt);

/// One step in the order g -> h -> T. Linear emission gives beta = 1.
FullStepResult step_full(const MacroState& macro, const FullMicroState& micro,
                         const Workspace& ws, double dt);

}  // namespace mmbug
