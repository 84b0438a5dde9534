#include "riskmat/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"
#include "riskmat/error.hpp"

namespace riskmat {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int ResponseScale::min_points() const {
  int v = options.empty() ? 0 : options.front().points;
  for (const auto& o : options) v = std::min(v, o.points);
  return v;
}

int ResponseScale::max_points() const {
  int v = options.empty() ? 0 : options.front().points;
  for (const auto& o : options) v = std::max(v, o.points);
  return v;
}

const ScaleOption* ResponseScale::find(std::string_view label) const {
  const std::string_view needle = trim(label);
  for (const auto& o : options) {
    if (trim(o.label) == needle) return &o;
  }
  return nullptr;
}

const Level* MaturityModel::find_level(int index) const {
  for (const auto& level : levels) {
    if (level.index == index) return &level;
  }
  return nullptr;
}

const Item* MaturityModel::find_item(std::string_view item_id) const {
  for (const auto& level : levels) {
    for (const auto& item : level.items) {
      if (item.id == item_id) return &item;
    }
  }
  return nullptr;
}

std::size_t MaturityModel::item_count() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.items.size();
  return n;
}

namespace {

[[noreturn]] void fail(std::string_view where, const std::string& what) {
  if (where.empty()) throw Error(what);
  throw Error(std::string(where) + ": " + what);
}

void check_object(const ordered_json& v, std::string_view where) {
  if (!v.is_object()) fail(where, "expected a JSON object");
}

// Strict mode: every key must be in the allowed set.
void check_keys(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      fail(where, "unknown key \"" + it.key() + "\"");
    }
  }
}

const ordered_json& member(const ordered_json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string get_string(const ordered_json& v, std::string_view where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

std::int64_t get_int(const ordered_json& v, std::string_view where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

ordered_json parse_json(std::string_view text, std::string_view context) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(context, std::string("malformed JSON: ") + e.what());
  }
}

std::string path(std::string_view base, const std::string& suffix) {
  return std::string(base) + suffix;
}

}  // namespace

MaturityModel parse_model(std::string_view text, std::string_view context) {
  const ordered_json root = parse_json(text, context);
  const std::string where(context.empty() ? "model" : context);
  check_object(root, where);
  check_keys(root, {"id", "name", "scale", "levels", "threshold", "groupings"}, where);

  MaturityModel m;
  m.id = get_string(member(root, "id", where), path(where, ".id"));
  m.name = get_string(member(root, "name", where), path(where, ".name"));

  {
    const auto& scale = member(root, "scale", where);
    const std::string sw = path(where, ".scale");
    check_object(scale, sw);
    check_keys(scale, {"options"}, sw);
    const auto& options = member(scale, "options", sw);
    if (!options.is_array()) fail(sw, "\"options\" must be an array");
    for (std::size_t i = 0; i < options.size(); ++i) {
      const std::string ow = sw + ".options[" + std::to_string(i) + "]";
      const auto& o = options[i];
      check_object(o, ow);
      check_keys(o, {"label", "points"}, ow);
      ScaleOption opt;
      opt.label = get_string(member(o, "label", ow), ow + ".label");
      opt.points = static_cast<int>(get_int(member(o, "points", ow), ow + ".points"));
      m.scale.options.push_back(std::move(opt));
    }
  }

  {
    const auto& levels = member(root, "levels", where);
    if (!levels.is_array()) fail(where, "\"levels\" must be an array");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const std::string lw = path(where, ".levels[" + std::to_string(i) + "]");
      const auto& l = levels[i];
      check_object(l, lw);
      check_keys(l, {"index", "name", "characteristics", "items"}, lw);
      Level level;
      level.index = static_cast<int>(get_int(member(l, "index", lw), lw + ".index"));
      level.name = get_string(member(l, "name", lw), lw + ".name");
      const auto& chars = member(l, "characteristics", lw);
      if (!chars.is_array()) fail(lw, "\"characteristics\" must be an array");
      for (std::size_t c = 0; c < chars.size(); ++c) {
        level.characteristics.push_back(
            get_string(chars[c], lw + ".characteristics[" + std::to_string(c) + "]"));
      }
      const auto& items = member(l, "items", lw);
      if (!items.is_array()) fail(lw, "\"items\" must be an array");
      for (std::size_t k = 0; k < items.size(); ++k) {
        const std::string iw = lw + ".items[" + std::to_string(k) + "]";
        const auto& it = items[k];
        check_object(it, iw);
        check_keys(it, {"id", "prompt", "prompt_en"}, iw);
        Item item;
        item.id = get_string(member(it, "id", iw), iw + ".id");
        item.prompt = get_string(member(it, "prompt", iw), iw + ".prompt");
        if (it.contains("prompt_en")) {
          item.prompt_en = get_string(it["prompt_en"], iw + ".prompt_en");
        }
        item.level_index = level.index;
        level.items.push_back(std::move(item));
      }
      m.levels.push_back(std::move(level));
    }
  }

  {
    const auto& threshold = member(root, "threshold", where);
    const std::string tw = path(where, ".threshold");
    check_object(threshold, tw);
    check_keys(threshold, {"kind", "fraction_num", "fraction_den"}, tw);
    const std::string kind = get_string(member(threshold, "kind", tw), tw + ".kind");
    if (kind == "fraction_of_max") {
      m.threshold.kind = ThresholdKind::FractionOfMax;
      m.threshold.fraction_num = get_int(member(threshold, "fraction_num", tw), tw + ".fraction_num");
      m.threshold.fraction_den = get_int(member(threshold, "fraction_den", tw), tw + ".fraction_den");
    } else if (kind == "none") {
      m.threshold.kind = ThresholdKind::None;
      if (threshold.contains("fraction_num") || threshold.contains("fraction_den")) {
        fail(tw, "fraction fields are not allowed for kind \"none\"");
      }
    } else {
      fail(tw, "unknown threshold kind \"" + kind + "\"");
    }
  }

  if (root.contains("groupings")) {
    const auto& groupings = root["groupings"];
    if (!groupings.is_array()) fail(where, "\"groupings\" must be an array");
    for (std::size_t i = 0; i < groupings.size(); ++i) {
      const std::string gw = path(where, ".groupings[" + std::to_string(i) + "]");
      const auto& g = groupings[i];
      check_object(g, gw);
      check_keys(g, {"name", "items"}, gw);
      Grouping grouping;
      grouping.name = get_string(member(g, "name", gw), gw + ".name");
      const auto& ids = member(g, "items", gw);
      if (!ids.is_array()) fail(gw, "\"items\" must be an array");
      for (std::size_t k = 0; k < ids.size(); ++k) {
        grouping.item_ids.push_back(get_string(ids[k], gw + ".items[" + std::to_string(k) + "]"));
      }
      m.groupings.push_back(std::move(grouping));
    }
  }

  const std::vector<std::string> violations = validate_model(m);
  if (!violations.empty()) {
    std::string msg = "invalid model";
    for (const auto& v : violations) msg += "; " + v;
    fail(where, msg);
  }
  return m;
}

std::string serialize_model(const MaturityModel& m) {
  ordered_json root;
  root["id"] = m.id;
  root["name"] = m.name;
  ordered_json options = ordered_json::array();
  for (const auto& o : m.scale.options) {
    options.push_back({{"label", o.label}, {"points", o.points}});
  }
  root["scale"] = {{"options", std::move(options)}};
  ordered_json levels = ordered_json::array();
  for (const auto& level : m.levels) {
    ordered_json items = ordered_json::array();
    for (const auto& item : level.items) {
      ordered_json j{{"id", item.id}, {"prompt", item.prompt}};
      if (item.prompt_en) j["prompt_en"] = *item.prompt_en;
      items.push_back(std::move(j));
    }
    levels.push_back({{"index", level.index},
                      {"name", level.name},
                      {"characteristics", level.characteristics},
                      {"items", std::move(items)}});
  }
  root["levels"] = std::move(levels);
  if (m.threshold.kind == ThresholdKind::FractionOfMax) {
    root["threshold"] = {{"kind", "fraction_of_max"},
                         {"fraction_num", m.threshold.fraction_num},
                         {"fraction_den", m.threshold.fraction_den}};
  } else {
    root["threshold"] = {{"kind", "none"}};
  }
  if (!m.groupings.empty()) {
    ordered_json groupings = ordered_json::array();
    for (const auto& g : m.groupings) {
      groupings.push_back({{"name", g.name}, {"items", g.item_ids}});
    }
    root["groupings"] = std::move(groupings);
  }
  return root.dump(2) + "\n";
}

std::vector<std::string> validate_model(const MaturityModel& m) {
  std::vector<std::string> v;

  if (m.scale.options.size() < 2) {
    v.push_back("scale: fewer than 2 options");
  }
  {
    std::set<std::string> labels;
    std::set<int> points;
    for (const auto& o : m.scale.options) {
      if (!labels.insert(std::string(trim(o.label))).second) {
        v.push_back("scale: duplicate option label \"" + o.label + "\"");
      }
      if (!points.insert(o.points).second) {
        v.push_back("scale: duplicate option points " + std::to_string(o.points));
      }
    }
  }

  int expected = 1;
  for (const auto& level : m.levels) {
    if (level.index != expected) {
      v.push_back("level index " + std::to_string(level.index) + " out of sequence (expected " +
                  std::to_string(expected) + ")");
      expected = level.index + 1;
    } else {
      ++expected;
    }
  }

  std::set<std::string> item_ids;
  for (const auto& level : m.levels) {
    for (const auto& item : level.items) {
      const bool has_ws =
          std::any_of(item.id.begin(), item.id.end(),
                      [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
      if (item.id.empty() || has_ws) {
        v.push_back("item id \"" + item.id + "\" is empty or contains whitespace");
      }
      if (!item_ids.insert(item.id).second) {
        v.push_back("duplicate item id \"" + item.id + "\"");
      }
      if (item.level_index != level.index) {
        v.push_back("item \"" + item.id + "\": level_index " + std::to_string(item.level_index) +
                    " does not match owning level " + std::to_string(level.index));
      }
    }
  }

  if (m.threshold.kind == ThresholdKind::FractionOfMax) {
    if (m.threshold.fraction_den <= 0) {
      v.push_back("threshold: fraction_den must be positive");
    } else if (m.threshold.fraction_num <= 0 || m.threshold.fraction_num > m.threshold.fraction_den) {
      v.push_back("threshold: fraction " + std::to_string(m.threshold.fraction_num) + "/" +
                  std::to_string(m.threshold.fraction_den) + " outside (0, 1]");
    }
  }

  std::set<std::string> grouped;
  for (const auto& g : m.groupings) {
    for (const auto& id : g.item_ids) {
      if (item_ids.find(id) == item_ids.end()) {
        v.push_back("grouping \"" + g.name + "\": unknown item id \"" + id + "\"");
      } else if (!grouped.insert(id).second) {
        v.push_back("item \"" + id + "\" appears in more than one grouping");
      }
    }
  }

  return v;
}

std::vector<ResponseSet> parse_responses(std::string_view text, std::string_view context) {
  const ordered_json root = parse_json(text, context);
  const std::string where(context.empty() ? "responses" : context);
  check_object(root, where);
  check_keys(root, {"model", "responses"}, where);
  const std::string model_id = get_string(member(root, "model", where), path(where, ".model"));
  const auto& responses = member(root, "responses", where);
  if (!responses.is_array()) fail(where, "\"responses\" must be an array");

  std::vector<ResponseSet> out;
  for (std::size_t i = 0; i < responses.size(); ++i) {
    const std::string rw = path(where, ".responses[" + std::to_string(i) + "]");
    const auto& r = responses[i];
    check_object(r, rw);
    check_keys(r, {"respondent", "recorded_at", "answers"}, rw);
    ResponseSet rs;
    rs.model_id = model_id;
    rs.respondent = get_string(member(r, "respondent", rw), rw + ".respondent");
    rs.recorded_at = parse_rfc3339(get_string(member(r, "recorded_at", rw), rw + ".recorded_at"));
    const auto& answers = member(r, "answers", rw);
    check_object(answers, rw + ".answers");
    for (auto it = answers.begin(); it != answers.end(); ++it) {
      rs.answers[it.key()] = get_string(it.value(), rw + ".answers[\"" + it.key() + "\"]");
    }
    out.push_back(std::move(rs));
  }
  return out;
}

std::string serialize_responses(std::string_view model_id,
                                const std::vector<ResponseSet>& responses) {
  ordered_json root;
  root["model"] = std::string(model_id);
  ordered_json arr = ordered_json::array();
  for (const auto& r : responses) {
    ordered_json answers = ordered_json::object();
    for (const auto& [id, label] : r.answers) answers[id] = label;
    arr.push_back({{"respondent", r.respondent},
                   {"recorded_at", format_rfc3339(r.recorded_at)},
                   {"answers", std::move(answers)}});
  }
  root["responses"] = std::move(arr);
  return root.dump(2) + "\n";
}

}  // namespace riskmat
