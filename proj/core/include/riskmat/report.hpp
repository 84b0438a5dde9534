#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "riskmat/scoring.hpp"

namespace riskmat {

enum class RenderFormat { Json, Text, Svg };

std::optional<RenderFormat> render_format_from_name(std::string_view name);

struct RenderOptions {
  // When set, text output marks groupings whose total reaches the threshold.
  std::optional<int> grouping_flag_threshold;
};

// Rendering is total over valid reports and deterministic: equal reports
// produce byte-identical output.
//   json: canonical field order, exact rationals (fraction strings when
//         non-integer), round-trips through parse_report.
//   text: one line per level plus achieved-level banner, gap plan and
//         grouping totals.
//   svg:  800px-wide horizontal bar per level (40px each) with the
//         threshold drawn as a vertical rule and the achieved level
//         highlighted.
std::string render(const AssessmentReport& report, RenderFormat format,
                   const RenderOptions& options = {});

// Inverse of render(_, Json): parse_report(render(r, Json)) == r.
AssessmentReport parse_report(std::string_view text, std::string_view context = {});

struct TrendPoint {
  Timestamp at = 0;
  int level = 0;
};

// Step chart of achieved level over time (svg) or one line per assessment
// (text). History must be sorted ascending; empty history is an error.
std::string render_trend(std::span<const TrendPoint> history, RenderFormat format);

}  // namespace riskmat
