#include "riskmat/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "riskmat/error.hpp"

namespace riskmat {

using ordered_json = nlohmann::ordered_json;

std::optional<RenderFormat> render_format_from_name(std::string_view name) {
  if (name == "json") return RenderFormat::Json;
  if (name == "text") return RenderFormat::Text;
  if (name == "svg") return RenderFormat::Svg;
  return std::nullopt;
}

namespace {

// Exact rationals in JSON: integers as numbers, everything else as a
// canonical "num/den" string so reports round-trip without float drift.
ordered_json rational_value(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

Rational rational_from(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error(where + ": malformed rational \"" + v.get<std::string>() + "\"");
    }
  }
  throw Error(where + ": expected an integer or \"num/den\" string");
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Pad to a display width counting UTF-8 code points, not bytes.
std::string pad_utf8(std::string_view s, std::size_t width) {
  std::size_t chars = 0;
  for (const char c : s) {
    if ((static_cast<unsigned char>(c) & 0xc0) != 0x80) ++chars;
  }
  std::string out(s);
  while (chars++ < width) out += ' ';
  return out;
}

std::string lpad(std::string_view s, std::size_t width) {
  std::string out;
  while (out.size() + s.size() < width) out += ' ';
  out += s;
  return out;
}

constexpr double kSvgWidth = 800;
constexpr int kRowHeight = 40;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 20;
constexpr int kMarginLeft = 200;
constexpr int kMarginRight = 60;
constexpr int kPlotWidth = 800 - kMarginLeft - kMarginRight;

std::string render_json(const AssessmentReport& report) {
  ordered_json root;
  root["model_id"] = report.model_id;
  root["respondents"] = report.respondents;
  ordered_json levels = ordered_json::array();
  for (const auto& entry : report.levels) {
    const LevelScore& s = entry.score;
    ordered_json j;
    j["index"] = s.level_index;
    j["name"] = entry.name;
    j["points_num"] = s.points.num();
    j["points_den"] = s.points.den();
    j["max"] = s.max_points;
    j["required"] = s.required_points ? ordered_json(*s.required_points) : ordered_json(nullptr);
    j["percentage"] = s.percentage.to_double();
    j["band"] = entry.band ? ordered_json(std::string(band_name(*entry.band)))
                           : ordered_json(nullptr);
    j["passed"] = s.passed ? ordered_json(*s.passed) : ordered_json(nullptr);
    levels.push_back(std::move(j));
  }
  root["levels"] = std::move(levels);
  root["achieved_level"] =
      report.achieved_level ? ordered_json(*report.achieved_level) : ordered_json(nullptr);
  if (report.groupings) {
    ordered_json groupings = ordered_json::array();
    for (const auto& g : *report.groupings) {
      groupings.push_back({{"name", g.name},
                           {"total", rational_value(g.total)},
                           {"min", g.min_total},
                           {"max", g.max_total}});
    }
    root["groupings"] = std::move(groupings);
  }
  if (report.gap) {
    ordered_json upgrades = ordered_json::array();
    for (const auto& u : report.gap->upgrades) {
      upgrades.push_back({{"item", u.item}, {"from", rational_value(u.from)}, {"to", u.to}});
    }
    root["gap"] = {{"target", report.gap->target_level},
                   {"deficit_num", report.gap->deficit.num()},
                   {"deficit_den", report.gap->deficit.den()},
                   {"upgrades", std::move(upgrades)}};
  }
  root["produced_at"] = format_rfc3339(report.produced_at);
  return root.dump(2) + "\n";
}

std::string render_text(const AssessmentReport& report, const RenderOptions& options) {
  std::string out;
  out += "Model: " + report.model_id + "\n";
  out += "Respondents: " + std::to_string(report.respondents) + "\n";
  out += "Produced: " + format_rfc3339(report.produced_at) + "\n\n";

  out += "  level  " + pad_utf8("name", 30) + lpad("points", 8) + lpad("required", 10) +
         lpad("max", 6) + lpad("percent", 9) + "  " + pad_utf8("band", 14) + "passed\n";
  for (const auto& entry : report.levels) {
    const LevelScore& s = entry.score;
    out += lpad(std::to_string(s.level_index), 7) + "  " + pad_utf8(entry.name, 30);
    out += lpad(s.points.str(), 8);
    out += lpad(s.required_points ? std::to_string(*s.required_points) : "-", 10);
    out += lpad(std::to_string(s.max_points), 6);
    out += lpad(s.percentage.decimal(2), 9);
    out += "  " + pad_utf8(entry.band ? band_name(*entry.band) : "-", 14);
    out += s.passed ? (*s.passed ? "yes" : "no") : "-";
    out += "\n";
  }
  out += "\n";
  if (report.achieved_level) {
    std::string name;
    for (const auto& entry : report.levels) {
      if (entry.score.level_index == *report.achieved_level) name = entry.name;
    }
    out += "Achieved level: " + std::to_string(*report.achieved_level) +
           (name.empty() ? "" : " (" + name + ")") + "\n";
  } else {
    out += "Achieved level: not applicable (no threshold rule)\n";
  }

  if (report.gap && !report.gap->upgrades.empty()) {
    out += "\nGap to level " + std::to_string(report.gap->target_level) + ": deficit " +
           report.gap->deficit.str() + " point(s), raise " +
           std::to_string(report.gap->upgrades.size()) + " item(s):\n";
    for (const auto& u : report.gap->upgrades) {
      out += "  " + u.item + ": " + u.from.str() + " -> " + std::to_string(u.to) + "\n";
    }
  }

  if (report.groupings) {
    out += "\nGrouping totals:\n";
    for (const auto& g : *report.groupings) {
      out += "  " + pad_utf8(g.name, 28) + lpad(g.total.str(), 6) + "  (range " +
             std::to_string(g.min_total) + ".." + std::to_string(g.max_total) + ")";
      if (options.grouping_flag_threshold && g.total >= Rational(*options.grouping_flag_threshold)) {
        out += "  *";
      }
      out += "\n";
    }
    if (options.grouping_flag_threshold) {
      out += "  (* total >= " + std::to_string(*options.grouping_flag_threshold) + ")\n";
    }
  }
  return out;
}

std::string render_svg(const AssessmentReport& report) {
  const int rows = static_cast<int>(report.levels.size());
  const int height = kMarginTop + rows * kRowHeight + kMarginBottom;

  // The vertical threshold rule: required/max of the first thresholded level
  // with items (exactly the model's fraction when required = fraction x max).
  std::optional<Rational> threshold_frac;
  for (const auto& entry : report.levels) {
    if (entry.score.required_points && entry.score.max_points > 0) {
      threshold_frac = Rational(*entry.score.required_points) / Rational(entry.score.max_points);
      break;
    }
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 800 " + std::to_string(height) + "\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
  svg += "  <text x=\"" + std::to_string(kMarginLeft) +
         "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#333333\">" +
         "Adherence by level (%): " + xml_escape(report.model_id) + "</text>\n";

  for (int i = 0; i < rows; ++i) {
    const auto& entry = report.levels[static_cast<std::size_t>(i)];
    const int row_y = kMarginTop + i * kRowHeight;
    const int bar_y = row_y + 8;
    const int bar_h = kRowHeight - 16;
    const Rational width = entry.score.percentage * Rational(kPlotWidth) / Rational(100);
    const bool highlighted = report.achieved_level &&
                             entry.score.level_index == *report.achieved_level;
    svg += "  <text x=\"" + std::to_string(kMarginLeft - 8) + "\" y=\"" +
           std::to_string(row_y + kRowHeight / 2 + 5) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">" +
           std::to_string(entry.score.level_index) + ". " + xml_escape(entry.name) + "</text>\n";
    svg += "  <rect class=\"bar\" x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
           std::to_string(bar_y) + "\" width=\"" + width.decimal(2) + "\" height=\"" +
           std::to_string(bar_h) + "\" fill=\"" + (highlighted ? "#1b6ca8" : "#9dc3de") +
           "\"/>\n";
    svg += "  <text x=\"" + std::to_string(kMarginLeft + kPlotWidth + 6) + "\" y=\"" +
           std::to_string(row_y + kRowHeight / 2 + 5) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">" +
           entry.score.percentage.decimal(2) + "%</text>\n";
  }

  if (threshold_frac) {
    const Rational x = Rational(kMarginLeft) + *threshold_frac * Rational(kPlotWidth);
    const std::string xs = x.decimal(2);
    svg += "  <line x1=\"" + xs + "\" y1=\"" + std::to_string(kMarginTop) + "\" x2=\"" + xs +
           "\" y2=\"" + std::to_string(kMarginTop + rows * kRowHeight) +
           "\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"5 4\"/>\n";
    svg += "  <text x=\"" + xs + "\" y=\"" + std::to_string(kMarginTop - 6) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" " +
           "fill=\"#c0392b\">" + (*threshold_frac * Rational(100)).decimal(0) + "%</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render(const AssessmentReport& report, RenderFormat format,
                   const RenderOptions& options) {
  switch (format) {
    case RenderFormat::Json: return render_json(report);
    case RenderFormat::Text: return render_text(report, options);
    case RenderFormat::Svg: return render_svg(report);
  }
  throw Error("unknown render format");
}

namespace {

AssessmentReport parse_report_impl(std::string_view text, const std::string& where) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(where + ": malformed JSON: " + e.what());
  }
  if (!root.is_object()) throw Error(where + ": expected a JSON object");
  for (auto it = root.begin(); it != root.end(); ++it) {
    static constexpr std::string_view kKeys[] = {"model_id",       "respondents", "levels",
                                                 "achieved_level", "groupings",   "gap",
                                                 "produced_at"};
    if (std::find(std::begin(kKeys), std::end(kKeys), it.key()) == std::end(kKeys)) {
      throw Error(where + ": unknown key \"" + it.key() + "\"");
    }
  }

  auto need = [&](const ordered_json& obj, const char* key) -> const ordered_json& {
    const auto it = obj.find(key);
    if (it == obj.end()) throw Error(where + ": missing key \"" + key + "\"");
    return *it;
  };

  AssessmentReport report;
  report.model_id = need(root, "model_id").get<std::string>();
  report.respondents = need(root, "respondents").get<int>();

  for (const auto& j : need(root, "levels")) {
    LevelEntry entry;
    LevelScore& s = entry.score;
    s.level_index = need(j, "index").get<int>();
    entry.name = need(j, "name").get<std::string>();
    s.points = Rational(need(j, "points_num").get<std::int64_t>(),
                        need(j, "points_den").get<std::int64_t>());
    s.max_points = need(j, "max").get<int>();
    if (!need(j, "required").is_null()) s.required_points = j["required"].get<int>();
    if (s.max_points > 0) {
      s.percentage = s.points * Rational(100) / Rational(s.max_points);
      if (s.percentage < Rational(0)) s.percentage = Rational(0);
    } else {
      s.percentage = Rational(100);
    }
    (void)need(j, "percentage");  // derived; the exact value is recomputed above
    if (!need(j, "band").is_null()) {
      const std::string name = j["band"].get<std::string>();
      entry.band = band_from_name(name);
      if (!entry.band) throw Error(where + ": unknown band \"" + name + "\"");
    }
    if (!need(j, "passed").is_null()) s.passed = j["passed"].get<bool>();
    report.levels.push_back(std::move(entry));
  }

  if (!need(root, "achieved_level").is_null()) {
    report.achieved_level = root["achieved_level"].get<int>();
  }

  if (root.contains("groupings")) {
    std::vector<GroupingScore> groupings;
    for (const auto& j : root["groupings"]) {
      GroupingScore g;
      g.name = need(j, "name").get<std::string>();
      g.total = rational_from(need(j, "total"), where + ": grouping total");
      g.min_total = need(j, "min").get<int>();
      g.max_total = need(j, "max").get<int>();
      groupings.push_back(std::move(g));
    }
    report.groupings = std::move(groupings);
  }

  if (root.contains("gap")) {
    const auto& j = root["gap"];
    GapPlan gap;
    gap.target_level = need(j, "target").get<int>();
    gap.deficit = Rational(need(j, "deficit_num").get<std::int64_t>(),
                           need(j, "deficit_den").get<std::int64_t>());
    for (const auto& u : need(j, "upgrades")) {
      GapUpgrade upgrade;
      upgrade.item = need(u, "item").get<std::string>();
      upgrade.from = rational_from(need(u, "from"), where + ": upgrade from");
      upgrade.to = need(u, "to").get<int>();
      gap.upgrades.push_back(std::move(upgrade));
    }
    report.gap = std::move(gap);
  }

  report.produced_at = parse_rfc3339(need(root, "produced_at").get<std::string>());
  return report;
}

}  // namespace

AssessmentReport parse_report(std::string_view text, std::string_view context) {
  const std::string where(context.empty() ? "report" : context);
  try {
    return parse_report_impl(text, where);
  } catch (const nlohmann::json::exception& e) {
    // wrong value types surface as library exceptions; report them uniformly
    throw Error(where + ": " + e.what());
  }
}

std::string render_trend(std::span<const TrendPoint> history, RenderFormat format) {
  if (history.empty()) throw Error("trend: empty history");

  if (format == RenderFormat::Text) {
    std::string out;
    for (const auto& p : history) {
      out += format_rfc3339(p.at) + "  " + std::to_string(p.level) + "\n";
    }
    return out;
  }
  if (format != RenderFormat::Svg) throw Error("trend: unsupported render format");

  constexpr int kLeft = 60, kRight = 20, kTop = 20, kBottom = 30;
  constexpr int kW = 800, kH = 260;
  constexpr int kPlotW = kW - kLeft - kRight;
  constexpr int kPlotH = kH - kTop - kBottom;

  int max_level = 5;
  for (const auto& p : history) max_level = std::max(max_level, p.level);

  const Timestamp t0 = history.front().at;
  const Timestamp t1 = history.back().at;
  const Timestamp span = t1 > t0 ? t1 - t0 : 1;

  const auto x_of = [&](Timestamp t) {
    return Rational(kLeft) + Rational(t - t0, span) * Rational(kPlotW);
  };
  const auto y_of = [&](int level) {
    return Rational(kTop) + Rational(max_level - level, max_level - 1) * Rational(kPlotH);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"260\" "
         "viewBox=\"0 0 800 260\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"260\" fill=\"#ffffff\"/>\n";
  for (int level = 1; level <= max_level; ++level) {
    const std::string y = y_of(level).decimal(2);
    svg += "  <line x1=\"" + std::to_string(kLeft) + "\" y1=\"" + y + "\" x2=\"" +
           std::to_string(kLeft + kPlotW) + "\" y2=\"" + y +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "  <text x=\"" + std::to_string(kLeft - 8) + "\" y=\"" + y +
           "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\"#333333\">" + std::to_string(level) + "</text>\n";
  }

  // staircase: hold each level until the next assessment, no smoothing
  std::string d = "M " + x_of(history.front().at).decimal(2) + " " +
                  y_of(history.front().level).decimal(2);
  for (std::size_t i = 1; i < history.size(); ++i) {
    d += " H " + x_of(history[i].at).decimal(2);
    d += " V " + y_of(history[i].level).decimal(2);
  }
  d += " H " + std::to_string(kLeft + kPlotW);
  svg += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"#1b6ca8\" stroke-width=\"2\"/>\n";

  for (const auto& p : history) {
    svg += "  <circle cx=\"" + x_of(p.at).decimal(2) + "\" cy=\"" + y_of(p.level).decimal(2) +
           "\" r=\"4\" fill=\"#1b6ca8\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace riskmat
