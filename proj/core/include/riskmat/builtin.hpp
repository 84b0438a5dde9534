#pragma once

#include <string_view>
#include <vector>

#include "riskmat/checklist.hpp"
#include "riskmat/model.hpp"

namespace riskmat {

// The two bundled instruments, in stable order: "rmgp-v1" (five staged
// risk-management maturity levels, 32 items, 0..4 scale, 3/4 threshold)
// and "pmmm-lifecycle" (20 items, -3..+3 scale, five life-cycle phases).
const std::vector<MaturityModel>& builtin_models();

// Throws riskmat::Error for unknown ids.
const MaturityModel& builtin_model(std::string_view id);

// The bundled risk-management process checklist template.
const ChecklistTemplate& builtin_checklist();

}  // namespace riskmat
