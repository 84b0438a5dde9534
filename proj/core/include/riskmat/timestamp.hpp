#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace riskmat {

// Seconds since the Unix epoch, UTC. All file formats carry timestamps as
// RFC-3339 strings with second precision ("2026-08-10T11:22:33Z").
using Timestamp = std::int64_t;

// Strict parse of "YYYY-MM-DDThh:mm:ssZ". Throws riskmat::Error.
Timestamp parse_rfc3339(std::string_view text);

std::string format_rfc3339(Timestamp t);

Timestamp now_utc();

}  // namespace riskmat
