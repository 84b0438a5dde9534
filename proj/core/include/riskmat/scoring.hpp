#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riskmat/model.hpp"
#include "riskmat/rational.hpp"
#include "riskmat/timestamp.hpp"

namespace riskmat {

// Per-level score. All quantities are exact; pass/fail never goes through
// floating point.
struct LevelScore {
  int level_index = 0;
  Rational points;                         // sum of per-item (mean) points
  int max_points = 0;                      // item count x scale maximum
  std::optional<int> required_points;      // absent when no threshold rule
  Rational percentage;                     // 100 x points / max; 100 when max == 0
  std::optional<bool> passed;              // absent for zero-item levels / no threshold

  friend bool operator==(const LevelScore&, const LevelScore&) = default;
};

// The four adherence bands: [0,20], (20,60], (60,90], (90,100].
enum class Band { NulaOuFraca, Regular, Boa, Completa };

std::string_view band_name(Band b);                       // "nula_ou_fraca", ...
std::string_view band_range(Band b);                      // "[0,20]", ...
std::optional<Band> band_from_name(std::string_view name);

struct GroupingScore {
  std::string name;
  Rational total;     // integer for a single respondent, mean-sum otherwise
  int min_total = 0;  // item count x scale minimum
  int max_total = 0;  // item count x scale maximum

  friend bool operator==(const GroupingScore&, const GroupingScore&) = default;
};

struct GapUpgrade {
  std::string item;
  Rational from;  // current (aggregated) points
  int to = 0;     // scale maximum

  friend bool operator==(const GapUpgrade&, const GapUpgrade&) = default;
};

// Minimal set of items to raise to the scale maximum so that the target
// level passes. Empty when the target already passes.
struct GapPlan {
  int target_level = 0;
  Rational deficit;
  std::vector<GapUpgrade> upgrades;

  friend bool operator==(const GapPlan&, const GapPlan&) = default;
};

struct LevelEntry {
  LevelScore score;
  std::string name;
  std::optional<Band> band;  // absent for zero-item levels

  friend bool operator==(const LevelEntry&, const LevelEntry&) = default;
};

struct AssessmentReport {
  std::string model_id;
  int respondents = 0;
  std::vector<LevelEntry> levels;
  std::optional<int> achieved_level;  // absent when the model has no threshold rule
  std::optional<std::vector<GroupingScore>> groupings;
  std::optional<GapPlan> gap;
  Timestamp produced_at = 0;

  friend bool operator==(const AssessmentReport&, const AssessmentReport&) = default;
};

enum class MissingPolicy {
  Error,        // unanswered items are an error
  FillMinimum,  // substitute the scale minimum and record a warning
};

struct Aggregated {
  std::map<std::string, Rational> points;  // item id -> mean points, exact
  int respondents = 0;
  std::vector<std::string> warnings;
};

// Per-item arithmetic mean over respondents, kept exact as sum/count.
// Aggregating a single response is the identity on its points.
// Throws riskmat::Error on an empty list, unknown labels, unknown item ids,
// a model-id mismatch (an empty response model_id counts as unbound), or
// (under MissingPolicy::Error) incomplete responses.
Aggregated aggregate(const MaturityModel& model, std::span<const ResponseSet> responses,
                     MissingPolicy missing = MissingPolicy::Error);

// Points are not cumulative between levels; each level is scored on its own
// items. required = ceil(fraction x N x max_points(scale)); the comparison
// points >= required is exact.
LevelScore score_level(const MaturityModel& model, int level_index,
                       const std::map<std::string, Rational>& answers);

// Largest L such that every level 2..L passes; zero-item levels pass
// vacuously. Returns 1 when level 2 fails, nullopt when the model has no
// threshold rule (level determination is not applicable).
std::optional<int> determine_level(const MaturityModel& model,
                                   std::span<const LevelScore> scores);

// Throws riskmat::Error outside [0, 100].
Band classify_adherence(const Rational& percentage);

// Sum of member-item points per grouping. Throws when the model defines no
// groupings or an answer is missing.
std::vector<GroupingScore> score_groupings(const MaturityModel& model,
                                           const std::map<std::string, Rational>& answers);

// Fewest-items upgrade plan for a failing level: items sorted by headroom
// (max - current) descending, ties by id ascending, taken until the deficit
// is covered, each raised to the scale maximum.
GapPlan gap_analysis(const MaturityModel& model,
                     const std::map<std::string, Rational>& answers, int target_level);

struct ScoreOptions {
  MissingPolicy missing = MissingPolicy::Error;
  Timestamp produced_at = 0;
};

struct ScoreResult {
  AssessmentReport report;
  std::vector<std::string> warnings;
};

// Full pipeline: aggregate -> per-level scores -> achieved level ->
// adherence bands -> grouping scores -> gap plan toward the next level.
ScoreResult score_assessment(const MaturityModel& model,
                             std::span<const ResponseSet> responses,
                             const ScoreOptions& options);

// Supplementary data: the level each respondent would achieve alone. Never
// vetoes the aggregate. nullopt entries for models without a threshold rule.
std::vector<std::optional<int>> per_respondent_levels(const MaturityModel& model,
                                                      std::span<const ResponseSet> responses,
                                                      MissingPolicy missing = MissingPolicy::Error);

}  // namespace riskmat
