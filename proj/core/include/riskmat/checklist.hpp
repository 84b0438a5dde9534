#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskmat/rational.hpp"
#include "riskmat/timestamp.hpp"

namespace riskmat {

struct ChecklistSection {
  std::string name;
  std::vector<std::string> items;

  friend bool operator==(const ChecklistSection&, const ChecklistSection&) = default;
};

struct ChecklistTemplate {
  std::vector<ChecklistSection> sections;

  std::size_t total_items() const;
  const ChecklistSection* find(std::string_view name) const;

  friend bool operator==(const ChecklistTemplate&, const ChecklistTemplate&) = default;
};

struct ChecklistEntry {
  bool done = false;
  Timestamp at = 0;

  friend bool operator==(const ChecklistEntry&, const ChecklistEntry&) = default;
};

// Completion flags over a template. Keys are (section name, item index)
// and must refer to template coordinates.
struct ChecklistState {
  std::map<std::pair<std::string, std::size_t>, ChecklistEntry> entries;

  friend bool operator==(const ChecklistState&, const ChecklistState&) = default;
};

// State file: JSON object mapping "section/index" to {done, at}. Keys that
// do not name a template coordinate are an error.
ChecklistState parse_checklist_state(std::string_view text, const ChecklistTemplate& tmpl,
                                     std::string_view context = {});

std::string serialize_checklist_state(const ChecklistState& state);

// Flips the done flag of one item, stamping `at`. Throws for coordinates
// outside the template.
void toggle_checklist_item(ChecklistState& state, const ChecklistTemplate& tmpl,
                           std::string_view section, std::size_t index, Timestamp at);

std::size_t done_count(const ChecklistState& state);

// done / total, in [0, 1].
Rational completion_fraction(const ChecklistTemplate& tmpl, const ChecklistState& state);

}  // namespace riskmat
