#pragma once

#include <stdexcept>
#include <string>

namespace riskmat {

// Data-level failure (malformed file, unknown label, missing answer, ...).
// The message always carries enough context to locate the offending input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace riskmat
