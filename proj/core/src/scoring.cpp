#include "riskmat/scoring.hpp"

#include <algorithm>

#include "riskmat/error.hpp"

namespace riskmat {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

// ceil(fraction x items x max_option_points), all in integers.
int required_points_for(const ThresholdRule& rule, std::size_t item_count, int max_option) {
  const std::int64_t numer = rule.fraction_num * static_cast<std::int64_t>(item_count) * max_option;
  const std::int64_t denom = rule.fraction_den;
  return static_cast<int>((numer + denom - 1) / denom);
}

const Rational& answer_for(const std::map<std::string, Rational>& answers,
                           const std::string& item_id, std::vector<std::string>* missing) {
  static const Rational kZero;
  const auto it = answers.find(item_id);
  if (it == answers.end()) {
    missing->push_back(item_id);
    return kZero;
  }
  return it->second;
}

}  // namespace

std::string_view band_name(Band b) {
  switch (b) {
    case Band::NulaOuFraca: return "nula_ou_fraca";
    case Band::Regular: return "regular";
    case Band::Boa: return "boa";
    case Band::Completa: return "completa";
  }
  return "?";
}

std::string_view band_range(Band b) {
  switch (b) {
    case Band::NulaOuFraca: return "[0,20]";
    case Band::Regular: return "(20,60]";
    case Band::Boa: return "(60,90]";
    case Band::Completa: return "(90,100]";
  }
  return "?";
}

std::optional<Band> band_from_name(std::string_view name) {
  for (const Band b : {Band::NulaOuFraca, Band::Regular, Band::Boa, Band::Completa}) {
    if (band_name(b) == name) return b;
  }
  return std::nullopt;
}

Aggregated aggregate(const MaturityModel& model, std::span<const ResponseSet> responses,
                     MissingPolicy missing) {
  if (responses.empty()) throw Error("no responses to aggregate");

  const int min_option = model.scale.min_points();
  const int count = static_cast<int>(responses.size());

  // integer point sums per item; the mean is formed once at the end
  std::map<std::string, std::int64_t> sums;
  for (const auto& level : model.levels) {
    for (const auto& item : level.items) sums[item.id] = 0;
  }

  Aggregated out;
  for (const auto& response : responses) {
    if (!response.model_id.empty() && response.model_id != model.id) {
      throw Error("response set of \"" + response.respondent + "\" declares model \"" +
                  response.model_id + "\", expected \"" + model.id + "\"");
    }
    std::vector<std::string> unanswered;
    for (auto& [item_id, sum] : sums) {
      const auto it = response.answers.find(item_id);
      if (it == response.answers.end()) {
        unanswered.push_back(item_id);
        sum += min_option;
        continue;
      }
      const ScaleOption* option = model.scale.find(it->second);
      if (option == nullptr) {
        throw Error("respondent \"" + response.respondent + "\": answer \"" + it->second +
                    "\" for item " + item_id + " is not a label of the \"" + model.id +
                    "\" scale");
      }
      sum += option->points;
    }
    for (const auto& [item_id, label] : response.answers) {
      if (sums.find(item_id) == sums.end()) {
        throw Error("respondent \"" + response.respondent + "\": unknown item id \"" + item_id +
                    "\" for model \"" + model.id + "\"");
      }
      (void)label;
    }
    if (!unanswered.empty()) {
      if (missing == MissingPolicy::Error) {
        throw Error("respondent \"" + response.respondent + "\": missing answers for item(s) " +
                    join_ids(unanswered));
      }
      out.warnings.push_back("respondent \"" + response.respondent + "\": " +
                             std::to_string(unanswered.size()) +
                             " missing answer(s) filled with scale minimum (" +
                             join_ids(unanswered) + ")");
    }
  }

  out.respondents = count;
  for (const auto& [item_id, sum] : sums) {
    out.points.emplace(item_id, Rational(sum, count));
  }
  return out;
}

LevelScore score_level(const MaturityModel& model, int level_index,
                       const std::map<std::string, Rational>& answers) {
  const Level* level = model.find_level(level_index);
  if (level == nullptr) {
    throw Error("model \"" + model.id + "\" has no level " + std::to_string(level_index));
  }

  LevelScore score;
  score.level_index = level_index;
  const int max_option = model.scale.max_points();
  score.max_points = static_cast<int>(level->items.size()) * max_option;

  std::vector<std::string> missing;
  for (const auto& item : level->items) {
    score.points += answer_for(answers, item.id, &missing);
  }
  if (!missing.empty()) {
    throw Error("level " + std::to_string(level_index) + ": missing answers for item(s) " +
                join_ids(missing));
  }

  if (score.max_points > 0) {
    score.percentage = score.points * Rational(100) / Rational(score.max_points);
    // scales with a negative minimum can push the ratio below the band domain
    if (score.percentage < Rational(0)) score.percentage = Rational(0);
  } else {
    score.percentage = Rational(100);
  }

  if (model.threshold.kind == ThresholdKind::FractionOfMax) {
    score.required_points = required_points_for(model.threshold, level->items.size(), max_option);
    if (!level->items.empty()) {
      score.passed = score.points >= Rational(*score.required_points);
    }
  }
  return score;
}

std::optional<int> determine_level(const MaturityModel& model,
                                   std::span<const LevelScore> scores) {
  if (model.threshold.kind == ThresholdKind::None) return std::nullopt;
  if (scores.size() != model.levels.size()) {
    throw Error("determine_level: expected one score per level");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].level_index != model.levels[i].index) {
      throw Error("determine_level: scores out of order at position " + std::to_string(i));
    }
  }

  // Longest all-pass prefix of the levels above the floor; levels without a
  // pass/fail verdict (zero items) pass vacuously.
  int achieved = model.levels.empty() ? 1 : model.levels.front().index;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i].passed.has_value() && !*scores[i].passed) break;
    achieved = scores[i].level_index;
  }
  return achieved;
}

Band classify_adherence(const Rational& percentage) {
  if (percentage < Rational(0) || percentage > Rational(100)) {
    throw Error("adherence percentage " + percentage.str() + " outside [0, 100]");
  }
  if (percentage <= Rational(20)) return Band::NulaOuFraca;
  if (percentage <= Rational(60)) return Band::Regular;
  if (percentage <= Rational(90)) return Band::Boa;
  return Band::Completa;
}

std::vector<GroupingScore> score_groupings(const MaturityModel& model,
                                           const std::map<std::string, Rational>& answers) {
  if (model.groupings.empty()) {
    throw Error("model \"" + model.id + "\" defines no groupings");
  }
  const int min_option = model.scale.min_points();
  const int max_option = model.scale.max_points();

  std::vector<GroupingScore> out;
  for (const auto& grouping : model.groupings) {
    GroupingScore gs;
    gs.name = grouping.name;
    std::vector<std::string> missing;
    for (const auto& id : grouping.item_ids) {
      gs.total += answer_for(answers, id, &missing);
    }
    if (!missing.empty()) {
      throw Error("grouping \"" + grouping.name + "\": missing answers for item(s) " +
                  join_ids(missing));
    }
    gs.min_total = static_cast<int>(grouping.item_ids.size()) * min_option;
    gs.max_total = static_cast<int>(grouping.item_ids.size()) * max_option;
    out.push_back(std::move(gs));
  }
  return out;
}

GapPlan gap_analysis(const MaturityModel& model,
                     const std::map<std::string, Rational>& answers, int target_level) {
  const Level* level = model.find_level(target_level);
  if (level == nullptr) {
    throw Error("model \"" + model.id + "\" has no level " + std::to_string(target_level));
  }
  if (model.threshold.kind != ThresholdKind::FractionOfMax) {
    throw Error("model \"" + model.id + "\" has no threshold rule; gap analysis not applicable");
  }

  const LevelScore score = score_level(model, target_level, answers);

  GapPlan plan;
  plan.target_level = target_level;
  if (!score.passed.has_value() || *score.passed) {
    return plan;  // already passing (or vacuously passing): nothing to raise
  }
  plan.deficit = Rational(*score.required_points) - score.points;

  const int max_option = model.scale.max_points();
  struct Candidate {
    std::string id;
    Rational current;
    Rational headroom;
  };
  std::vector<Candidate> candidates;
  for (const auto& item : level->items) {
    const Rational current = answers.at(item.id);
    candidates.push_back({item.id, current, Rational(max_option) - current});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.headroom != b.headroom) return b.headroom < a.headroom;
    return a.id < b.id;
  });

  Rational covered;
  for (const auto& c : candidates) {
    if (covered >= plan.deficit) break;
    covered += c.headroom;
    plan.upgrades.push_back({c.id, c.current, max_option});
  }
  // all-max coverage always reaches a fraction <= 1 threshold
  if (covered < plan.deficit) {
    throw Error("gap analysis: deficit " + plan.deficit.str() + " unreachable at level " +
                std::to_string(target_level));
  }
  return plan;
}

ScoreResult score_assessment(const MaturityModel& model,
                             std::span<const ResponseSet> responses,
                             const ScoreOptions& options) {
  Aggregated agg = aggregate(model, responses, options.missing);

  ScoreResult result;
  AssessmentReport& report = result.report;
  report.model_id = model.id;
  report.respondents = agg.respondents;
  report.produced_at = options.produced_at;
  result.warnings = agg.warnings;

  std::vector<LevelScore> scores;
  for (const auto& level : model.levels) {
    LevelEntry entry;
    entry.score = score_level(model, level.index, agg.points);
    entry.name = level.name;
    if (!level.items.empty()) {
      entry.band = classify_adherence(entry.score.percentage);
    }
    scores.push_back(entry.score);
    report.levels.push_back(std::move(entry));
  }

  report.achieved_level = determine_level(model, scores);

  if (!model.groupings.empty()) {
    report.groupings = score_groupings(model, agg.points);
  }

  if (report.achieved_level.has_value()) {
    const int next = *report.achieved_level + 1;
    if (model.find_level(next) != nullptr) {
      report.gap = gap_analysis(model, agg.points, next);
    }
  }
  return result;
}

std::vector<std::optional<int>> per_respondent_levels(const MaturityModel& model,
                                                      std::span<const ResponseSet> responses,
                                                      MissingPolicy missing) {
  std::vector<std::optional<int>> out;
  for (const auto& response : responses) {
    const Aggregated agg = aggregate(model, {&response, 1}, missing);
    std::vector<LevelScore> scores;
    for (const auto& level : model.levels) {
      scores.push_back(score_level(model, level.index, agg.points));
    }
    out.push_back(determine_level(model, scores));
  }
  return out;
}

}  // namespace riskmat
