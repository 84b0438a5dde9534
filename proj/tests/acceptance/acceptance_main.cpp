// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Every tolerance and expected value is pinned in code; the process exits
// nonzero if any criterion fails.

#include <array>
#include <bit>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "riskmat/builtin.hpp"
#include "riskmat/hash.hpp"
#include "riskmat/model.hpp"
#include "riskmat/report.hpp"
#include "riskmat/scoring.hpp"
#include "riskmat/storage.hpp"
#include "subprocess.hpp"
#include "test_support.hpp"

using namespace riskmat;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

ScoreOptions opts() { return {MissingPolicy::Error, parse_rfc3339("2026-08-10T00:00:00Z")}; }

// ---- 1. threshold reproduction -------------------------------------------

void criterion_threshold(Check& c) {
  const MaturityModel& m = builtin_model("rmgp-v1");
  const int expected_required[] = {27, 27, 12, 30};
  const auto zero = testsup::answers_map(m, 0);
  for (int level = 2; level <= 5; ++level) {
    const LevelScore s = score_level(m, level, zero);
    c.expect(s.required_points == expected_required[level - 2],
             "required points of level " + std::to_string(level));
    c.expect(*s.required_points == 3 * static_cast<int>(m.find_level(level)->items.size()),
             "required = 3 x N identity");
  }

  const auto rs = testsup::uniform_response(m, "Concordo Parcialmente");
  const AssessmentReport r = score_assessment(m, {&rs, 1}, opts()).report;
  c.expect(r.achieved_level == 5, "all-Concordo-Parcialmente achieves level 5");
  for (const auto& entry : r.levels) {
    if (entry.score.max_points == 0) continue;
    c.expect(entry.score.passed == true, "level passes");
    c.expect(entry.score.points == Rational(*entry.score.required_points),
             "level sits exactly at its threshold");
  }
}

// ---- 2. staging rule ------------------------------------------------------

void criterion_staging(Check& c) {
  const MaturityModel& m = builtin_model("rmgp-v1");

  for (unsigned mask = 0; mask < 16; ++mask) {
    // realize the pattern with real answers: all-max for passing levels,
    // all-min for failing ones
    std::map<std::string, Rational> answers;
    std::array<bool, 4> passes{};
    for (int level = 2; level <= 5; ++level) {
      const bool pass = (mask >> (level - 2)) & 1u;
      passes[static_cast<std::size_t>(level - 2)] = pass;
      for (const auto& item : m.find_level(level)->items) {
        answers[item.id] = Rational(pass ? 4 : 0);
      }
    }
    std::vector<LevelScore> scores;
    for (const auto& level : m.levels) scores.push_back(score_level(m, level.index, answers));
    int expected = 1;
    for (int i = 0; i < 4 && passes[static_cast<std::size_t>(i)]; ++i) expected = 2 + i;
    c.expect(determine_level(m, scores) == expected,
             "pattern mask " + std::to_string(mask) + " achieves " + std::to_string(expected));
  }

  // the two patterns called out explicitly: (pass,pass,fail,pass) and
  // (fail,pass,pass,pass)
  const auto realize = [&](std::array<int, 4> points_by_level) {
    std::map<std::string, Rational> answers;
    for (int level = 2; level <= 5; ++level) {
      for (const auto& item : m.find_level(level)->items) {
        answers[item.id] = Rational(points_by_level[static_cast<std::size_t>(level - 2)]);
      }
    }
    std::vector<LevelScore> scores;
    for (const auto& level : m.levels) scores.push_back(score_level(m, level.index, answers));
    return *determine_level(m, scores);
  };
  c.expect(realize({4, 4, 0, 4}) == 3, "(pass, pass, fail, pass) -> 3");
  c.expect(realize({0, 4, 4, 4}) == 1, "(fail, pass, pass, pass) -> 1");
}

// ---- 3. adherence bands ---------------------------------------------------

void criterion_bands(Check& c) {
  long long counts[4] = {0, 0, 0, 0};
  for (long long millis = 0; millis <= 100000; ++millis) {
    const Rational p(millis, 1000);
    const Band band = classify_adherence(p);
    ++counts[static_cast<int>(band)];
    const Band expected = p <= Rational(20)   ? Band::NulaOuFraca
                          : p <= Rational(60) ? Band::Regular
                          : p <= Rational(90) ? Band::Boa
                                              : Band::Completa;
    if (band != expected) {
      c.expect(false, "band mismatch at " + p.str());
      return;
    }
  }
  c.expect(counts[0] + counts[1] + counts[2] + counts[3] == 100001,
           "every value classified exactly once");
  c.expect(counts[0] == 20001 && counts[1] == 40000 && counts[2] == 30000 && counts[3] == 10000,
           "boundaries land at 20/60/90 with closed upper bounds");
  c.expect(classify_adherence(Rational(20)) == Band::NulaOuFraca, "20 belongs to the lower band");
  c.expect(classify_adherence(Rational(90)) == Band::Boa, "90 belongs to the lower band");
  c.expect(classify_adherence(Rational(90001, 1000)) == Band::Completa, "above 90 is completa");
}

// ---- 4. Appendix-2 tabulation ----------------------------------------------

void criterion_tabulation(Check& c) {
  const MaturityModel& m = builtin_model("pmmm-lifecycle");

  // constructed vector, phase totals summed by hand
  const std::array<int, 20> vec = {2, -1, 3, 0, 1,  -3, 2, 2, -2, 0,
                                   1, 3,  -1, 3, 0, -2, 0, 1, 2,  -3};
  std::map<std::string, Rational> answers;
  for (int q = 1; q <= 20; ++q) {
    answers["Q" + std::to_string(q)] = Rational(vec[static_cast<std::size_t>(q - 1)]);
  }
  const auto scores = score_groupings(m, answers);
  c.expect(scores.size() == 5, "five phases");
  const std::array<std::pair<const char*, int>, 5> expected = {{
      {"Embrionária", 8},            // Q1+Q3+Q14+Q17 = 2+3+3+0
      {"Aceitação – Alta Direção", -3},  // Q5+Q10+Q13+Q20 = 1+0-1-3
      {"Aceitação - Gerência", 5},   // Q7+Q9+Q12+Q19 = 2-2+3+2
      {"Crescimento", 0},            // Q4+Q6+Q8+Q11 = 0-3+2+1
      {"Maturidade", -2},            // Q2+Q15+Q16+Q18 = -1+0-2+1
  }};
  for (std::size_t i = 0; i < 5; ++i) {
    c.expect(scores[i].name == expected[i].first, "phase name " + std::to_string(i));
    c.expect(scores[i].total == Rational(expected[i].second),
             std::string("hand-computed total for ") + expected[i].first);
  }

  for (const auto& g : score_groupings(m, testsup::answers_map(m, 3))) {
    c.expect(g.total == Rational(12), "all-(+3) gives +12 per phase");
  }

  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> pts(-3, 3);
  for (int round = 0; round < 200; ++round) {
    std::map<std::string, Rational> random_answers;
    Rational item_sum;
    for (const auto& item : m.levels[0].items) {
      const int p = pts(rng);
      random_answers[item.id] = Rational(p);
      item_sum += Rational(p);
    }
    Rational phase_sum;
    for (const auto& g : score_groupings(m, random_answers)) phase_sum += g.total;
    if (phase_sum != item_sum) {
      c.expect(false, "phase sum != item sum in round " + std::to_string(round));
      return;
    }
  }
}

// ---- 5. gap-plan minimality -------------------------------------------------

void criterion_gap_minimality(Check& c) {
  const MaturityModel& m = builtin_model("rmgp-v1");
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> pts(0, 4);

  for (int round = 0; round < 500; ++round) {
    std::map<std::string, Rational> answers;
    for (const auto& level : m.levels) {
      for (const auto& item : level.items) answers[item.id] = Rational(pts(rng));
    }
    for (int level = 2; level <= 5; ++level) {
      const GapPlan plan = gap_analysis(m, answers, level);

      // oracle: enumerate every subset of the level's items (<= 2^10)
      const Level* l = m.find_level(level);
      const LevelScore base = score_level(m, level, answers);
      int minimal = 0;
      if (base.passed.has_value() && !*base.passed) {
        const int n = static_cast<int>(l->items.size());
        minimal = n + 1;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          Rational points = base.points;
          for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) points += Rational(4) - answers.at(l->items[i].id);
          }
          if (points >= Rational(*base.required_points)) {
            minimal = std::min(minimal, std::popcount(mask));
          }
        }
      }
      if (static_cast<int>(plan.upgrades.size()) != minimal) {
        c.expect(false, "level " + std::to_string(level) + " round " + std::to_string(round) +
                            ": greedy " + std::to_string(plan.upgrades.size()) + " vs brute " +
                            std::to_string(minimal));
        return;
      }
    }
  }
}

// ---- 6. monotonicity --------------------------------------------------------

void criterion_monotonicity(Check& c) {
  const MaturityModel& m = builtin_model("rmgp-v1");
  std::mt19937 rng(808);
  std::uniform_int_distribution<std::size_t> pick_option(0, m.scale.options.size() - 1);

  for (int round = 0; round < 1000; ++round) {
    ResponseSet rs = testsup::random_response(m, rng);
    std::vector<std::string> raisable;
    for (const auto& [id, label] : rs.answers) {
      if (m.scale.find(label)->points < 4) raisable.push_back(id);
    }
    if (raisable.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, raisable.size() - 1);
    const std::string item = raisable[pick(rng)];
    const int current = m.scale.find(rs.answers[item])->points;
    std::uniform_int_distribution<int> higher(current + 1, 4);

    const AssessmentReport before = score_assessment(m, {&rs, 1}, opts()).report;
    rs.answers[item] = testsup::label_for_points(m, higher(rng));
    const AssessmentReport after = score_assessment(m, {&rs, 1}, opts()).report;

    for (std::size_t i = 0; i < before.levels.size(); ++i) {
      if (after.levels[i].score.points < before.levels[i].score.points ||
          after.levels[i].score.percentage < before.levels[i].score.percentage) {
        c.expect(false, "score decreased in round " + std::to_string(round));
        return;
      }
    }
    if (*after.achieved_level < *before.achieved_level) {
      c.expect(false, "achieved level decreased in round " + std::to_string(round));
      return;
    }
  }
}

// ---- 7. aggregation exactness ------------------------------------------------

void criterion_aggregation_exactness(Check& c) {
  const MaturityModel& m = builtin_model("rmgp-v1");
  std::mt19937 rng(909);
  std::uniform_int_distribution<int> group_size(1, 4);

  for (int round = 0; round < 200; ++round) {
    std::vector<ResponseSet> group;
    const int n = group_size(rng);
    for (int i = 0; i < n; ++i) {
      group.push_back(testsup::random_response(m, rng, "r" + std::to_string(i)));
    }
    std::vector<ResponseSet> doubled = group;
    for (auto copy : group) {
      copy.respondent += "'";
      doubled.push_back(std::move(copy));
    }
    const AssessmentReport a = score_assessment(m, group, opts()).report;
    const AssessmentReport b = score_assessment(m, doubled, opts()).report;
    bool same = a.achieved_level == b.achieved_level;
    for (std::size_t i = 0; same && i < a.levels.size(); ++i) {
      same = a.levels[i].score.passed == b.levels[i].score.passed &&
             a.levels[i].score.points == b.levels[i].score.points;
    }
    if (!same) {
      c.expect(false, "duplication changed a decision in round " + std::to_string(round));
      return;
    }
  }

  // (all-4, all-2) scores identically to a single all-3 respondent
  const std::vector<ResponseSet> pair = {
      testsup::uniform_response(m, "Concordo Completamente", "a"),
      testsup::uniform_response(m, "Indiferente", "b"),
  };
  const auto single = testsup::uniform_response(m, "Concordo Parcialmente");
  const AssessmentReport two = score_assessment(m, pair, opts()).report;
  const AssessmentReport one = score_assessment(m, {&single, 1}, opts()).report;
  c.expect(two.levels == one.levels && two.achieved_level == one.achieved_level,
           "(all-4, all-2) equals all-3");
}

// ---- 8. round-trips ------------------------------------------------------------

void criterion_round_trips(Check& c) {
  for (const auto& m : builtin_models()) {
    c.expect(parse_model(serialize_model(m)) == m, "model round-trip for " + m.id);
  }

  const MaturityModel& m = builtin_model("rmgp-v1");
  std::mt19937 rng(4242);
  std::vector<ResponseSet> sets = {testsup::random_response(m, rng, "a"),
                                   testsup::random_response(m, rng, "b")};
  c.expect(parse_responses(serialize_responses(m.id, sets)) == sets, "response round-trip");

  const std::vector<ResponseSet> three = {
      testsup::uniform_response(m, "Discordo Completamente", "a"),
      testsup::uniform_response(m, "Indiferente", "b"),
      testsup::uniform_response(m, "Concordo Parcialmente", "cc"),
  };
  for (const AssessmentReport& report :
       {score_assessment(m, three, opts()).report,
        score_assessment(builtin_model("pmmm-lifecycle"),
                         {std::vector<ResponseSet>{testsup::uniform_response(
                             builtin_model("pmmm-lifecycle"), "Discordo", "x")}},
                         opts())
            .report}) {
    c.expect(parse_report(render(report, RenderFormat::Json)) == report, "report round-trip");
  }

  // pinned golden checksums of the bundled instruments
  c.expect(fnv1a64_hex(serialize_model(builtin_model("rmgp-v1"))) == "1f572028655c3252",
           "rmgp-v1 golden checksum");
  c.expect(fnv1a64_hex(serialize_model(builtin_model("pmmm-lifecycle"))) == "619ecf06dc0f4123",
           "pmmm-lifecycle golden checksum");
}

// ---- 9. end-to-end CLI -----------------------------------------------------------

void criterion_end_to_end(Check& c) {
  const std::string bin = RISKMAT_CLI_BIN;
  const std::string pin = "PRODUCED_AT=2026-08-10T00:00:00Z ";
  testsup::TempDir dir("acceptance_e2e");
  const std::string answers = (dir.path() / "answers.json").string();
  const std::string records = (dir.path() / "records").string();

  std::string input;
  for (int i = 0; i < 32; ++i) input += "3\n";
  const auto administered = testsup::run_shell(
      pin + bin + " administer --model builtin:rmgp-v1 --respondent alice --out " + answers,
      input);
  c.expect(administered.status == 0, "administer exits 0");

  const auto scored = testsup::run_shell(pin + bin + " score --model builtin:rmgp-v1" +
                                         " --responses " + answers + " --store " + records);
  c.expect(scored.status == 0, "score --store exits 0");
  c.expect(scored.out.find("Achieved level: 5") != std::string::npos, "score banner");

  const auto trend = testsup::run_shell(bin + " trend --store " + records + " --model rmgp-v1");
  c.expect(trend.status == 0, "trend exits 0");
  c.expect(trend.out == "2026-08-10T00:00:00Z  5\n", "one-step text trend");

  const auto svg = testsup::run_shell(bin + " trend --store " + records +
                                      " --model rmgp-v1 --format svg");
  c.expect(svg.status == 0, "trend svg exits 0");
  std::string why;
  c.expect(testsup::xml_well_formed(svg.out, &why), "trend svg well-formed: " + why);
  c.expect(svg.out.find("<path") != std::string::npos, "trend svg has the step path");

  // exit-code contract: 0 success, 1 data error, 2 usage error
  const struct {
    std::string command;
    std::string stdin_data;
    int expected;
  } matrix[] = {
      {bin + " list-models", "", 0},
      {bin + " --help", "", 0},
      {bin + " list-models --bogus", "", 2},
      {bin + " no-such-command", "", 2},
      {bin + " score --model builtin:rmgp-v1", "", 2},
      {bin + " score --model builtin:rmgp-v1 --responses " + answers + " --format png", "", 2},
      {bin + " checklist --toggle Initiation/0", "", 2},
      {bin + " score --model builtin:nope --responses " + answers, "", 1},
      {bin + " score --model builtin:rmgp-v1 --responses /does/not/exist.json", "", 1},
      {bin + " gap --model builtin:rmgp-v1 --target 9 --responses " + answers, "", 1},
      {bin + " trend --store /does/not/exist --model rmgp-v1", "", 1},
      {bin + " administer --model builtin:rmgp-v1 --respondent x --out " +
           (dir.path() / "p.json").string(),
       "3\n", 1},
      {bin + " validate --model builtin:rmgp-v1", "", 0},
      {bin + " score --model builtin:rmgp-v1 --responses " + answers, "", 0},
  };
  for (const auto& row : matrix) {
    const auto result = testsup::run_shell(row.command, row.stdin_data);
    if (result.status != row.expected) {
      c.expect(false, "exit " + std::to_string(result.status) + " != " +
                          std::to_string(row.expected) + " for: " + row.command);
    }
  }
}

}  // namespace

int main() {
  const struct {
    const char* title;
    std::function<void(Check&)> run;
  } criteria[] = {
      {"threshold reproduction (27/27/12/30, all-Concordo-Parcialmente -> level 5)",
       criterion_threshold},
      {"staging rule (16 pass/fail patterns, lower-level maintenance)", criterion_staging},
      {"adherence bands (0.001-step sweep, boundaries 20/60/90)", criterion_bands},
      {"life-cycle phase tabulation (hand sums, +12 per phase, conservation)",
       criterion_tabulation},
      {"gap-plan minimality (greedy == subset brute force, 500 vectors)",
       criterion_gap_minimality},
      {"monotonicity (1000 single-answer increments)", criterion_monotonicity},
      {"aggregation exactness (duplication invariance, mean identity)",
       criterion_aggregation_exactness},
      {"round-trips (model/response/report files, pinned checksums)", criterion_round_trips},
      {"end-to-end CLI (administer -> score --store -> trend, exit codes)", criterion_end_to_end},
  };

  int failures = 0;
  int number = 1;
  for (const auto& criterion : criteria) {
    Check check;
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::printf("[%s] criterion %d: %s%s%s\n", check.ok ? "PASS" : "FAIL", number,
                criterion.title, check.ok ? "" : " -- ", check.ok ? "" : check.detail.c_str());
    if (!check.ok) ++failures;
    ++number;
  }
  std::printf("%d/9 acceptance criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
