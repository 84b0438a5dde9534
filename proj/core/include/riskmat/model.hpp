#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskmat/rational.hpp"
#include "riskmat/timestamp.hpp"

namespace riskmat {

// One labeled point value of a Likert scale.
struct ScaleOption {
  std::string label;
  int points = 0;

  friend bool operator==(const ScaleOption&, const ScaleOption&) = default;
};

struct ResponseScale {
  std::vector<ScaleOption> options;

  int min_points() const;
  int max_points() const;

  // Case-sensitive lookup after trimming leading/trailing whitespace on
  // both sides. Returns nullptr when the label is not part of the scale.
  const ScaleOption* find(std::string_view label) const;

  friend bool operator==(const ResponseScale&, const ResponseScale&) = default;
};

struct Item {
  std::string id;
  std::string prompt;
  std::optional<std::string> prompt_en;
  int level_index = 0;  // owning level

  friend bool operator==(const Item&, const Item&) = default;
};

struct Level {
  int index = 0;
  std::string name;
  std::vector<std::string> characteristics;
  std::vector<Item> items;

  friend bool operator==(const Level&, const Level&) = default;
};

enum class ThresholdKind { FractionOfMax, None };

struct ThresholdRule {
  ThresholdKind kind = ThresholdKind::None;
  // Present iff kind == FractionOfMax; must satisfy 0 < num/den <= 1.
  std::int64_t fraction_num = 0;
  std::int64_t fraction_den = 1;

  Rational fraction() const { return Rational(fraction_num, fraction_den); }

  friend bool operator==(const ThresholdRule&, const ThresholdRule&) = default;
};

struct Grouping {
  std::string name;
  std::vector<std::string> item_ids;

  friend bool operator==(const Grouping&, const Grouping&) = default;
};

// A maturity-assessment instrument: staged levels, their questionnaire
// items, the response scale, the attainment threshold, and optional item
// groupings (e.g. life-cycle phases).
struct MaturityModel {
  std::string id;
  std::string name;
  ResponseScale scale;
  std::vector<Level> levels;
  ThresholdRule threshold;
  std::vector<Grouping> groupings;  // empty = none

  const Level* find_level(int index) const;
  const Item* find_item(std::string_view id) const;
  std::size_t item_count() const;

  friend bool operator==(const MaturityModel&, const MaturityModel&) = default;
};

// One respondent's answers: item id -> scale-option label, labels kept
// verbatim. Completeness and label resolution are checked at scoring time.
struct ResponseSet {
  std::string model_id;
  std::string respondent;
  std::map<std::string, std::string> answers;
  Timestamp recorded_at = 0;

  friend bool operator==(const ResponseSet&, const ResponseSet&) = default;
};

// Strict parse of the canonical model file format. Unknown keys, malformed
// structure and invariant violations all throw riskmat::Error with location
// context; `context` (usually a filename) prefixes every message.
MaturityModel parse_model(std::string_view text, std::string_view context = {});

// Canonical serialization; parse(serialize(m)) == m for every valid model.
std::string serialize_model(const MaturityModel& model);

// Returns every invariant violation (empty = valid). Violations are data,
// not failures; each message names the offending id/index/label.
std::vector<std::string> validate_model(const MaturityModel& model);

// Strict parse of a response file. Does not resolve labels or bind the
// model id; both happen at scoring time.
std::vector<ResponseSet> parse_responses(std::string_view text, std::string_view context = {});

std::string serialize_responses(std::string_view model_id,
                                const std::vector<ResponseSet>& responses);

std::string_view trim(std::string_view s);

}  // namespace riskmat
