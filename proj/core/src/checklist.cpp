#include "riskmat/checklist.hpp"

#include "json.hpp"
#include "riskmat/error.hpp"

namespace riskmat {

using ordered_json = nlohmann::ordered_json;

std::size_t ChecklistTemplate::total_items() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.items.size();
  return n;
}

const ChecklistSection* ChecklistTemplate::find(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

ChecklistState parse_checklist_state(std::string_view text, const ChecklistTemplate& tmpl,
                                     std::string_view context) {
  const std::string where(context.empty() ? "checklist state" : context);
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(where + ": malformed JSON: " + e.what());
  }
  if (!root.is_object()) throw Error(where + ": expected a JSON object");

  ChecklistState state;
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    const auto slash = key.rfind('/');
    if (slash == std::string::npos) {
      throw Error(where + ": key \"" + key + "\" is not of the form \"section/index\"");
    }
    const std::string section = key.substr(0, slash);
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(key.substr(slash + 1), &used);
      if (used != key.size() - slash - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(where + ": key \"" + key + "\" has a non-numeric item index");
    }
    const ChecklistSection* s = tmpl.find(section);
    if (s == nullptr || index >= s->items.size()) {
      throw Error(where + ": key \"" + key + "\" does not name a template item");
    }
    const auto& v = it.value();
    if (!v.is_object() || !v.contains("done") || !v.contains("at") || v.size() != 2 ||
        !v["done"].is_boolean() || !v["at"].is_string()) {
      throw Error(where + ": entry \"" + key + "\" must be {\"done\": bool, \"at\": timestamp}");
    }
    ChecklistEntry entry;
    entry.done = v["done"].get<bool>();
    entry.at = parse_rfc3339(v["at"].get<std::string>());
    state.entries[{section, index}] = entry;
  }
  return state;
}

std::string serialize_checklist_state(const ChecklistState& state) {
  ordered_json root = ordered_json::object();
  for (const auto& [coord, entry] : state.entries) {
    root[coord.first + "/" + std::to_string(coord.second)] = {
        {"done", entry.done}, {"at", format_rfc3339(entry.at)}};
  }
  return root.dump(2) + "\n";
}

void toggle_checklist_item(ChecklistState& state, const ChecklistTemplate& tmpl,
                           std::string_view section, std::size_t index, Timestamp at) {
  const ChecklistSection* s = tmpl.find(section);
  if (s == nullptr || index >= s->items.size()) {
    throw Error("checklist: \"" + std::string(section) + "/" + std::to_string(index) +
                "\" does not name a template item");
  }
  auto& entry = state.entries[{std::string(section), index}];
  entry.done = !entry.done;
  entry.at = at;
}

std::size_t done_count(const ChecklistState& state) {
  std::size_t n = 0;
  for (const auto& [coord, entry] : state.entries) {
    if (entry.done) ++n;
  }
  return n;
}

Rational completion_fraction(const ChecklistTemplate& tmpl, const ChecklistState& state) {
  const std::size_t total = tmpl.total_items();
  if (total == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(done_count(state)),
                  static_cast<std::int64_t>(total));
}

}  // namespace riskmat
