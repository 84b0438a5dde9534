// riskmat: score maturity questionnaires, render reports, track history.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riskmat/builtin.hpp"
#include "riskmat/error.hpp"
#include "riskmat/model.hpp"
#include "riskmat/report.hpp"
#include "riskmat/scoring.hpp"
#include "riskmat/storage.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace riskmat;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read \"" + path + "\"");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << bytes;
  out.flush();
  if (!out) throw Error("write failed for \"" + path + "\"");
}

// Report bytes go to --out when given, stdout otherwise.
void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    write_file(out_path, bytes);
  }
}

// "builtin:<id>" or a model file path.
MaturityModel load_model_source(const std::string& source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.rfind(kPrefix, 0) == 0) {
    return builtin_model(source.substr(kPrefix.size()));
  }
  return parse_model(read_file(source), source);
}

// For commands that only need the model id, also accept a bare id.
std::string resolve_model_id(const std::string& source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.rfind(kPrefix, 0) == 0) return builtin_model(source.substr(kPrefix.size())).id;
  if (fs::exists(source)) return parse_model(read_file(source), source).id;
  return source;
}

std::vector<ResponseSet> load_response_files(const std::vector<std::string>& paths) {
  std::vector<ResponseSet> all;
  for (const auto& path : paths) {
    auto sets = parse_responses(read_file(path), path);
    all.insert(all.end(), std::make_move_iterator(sets.begin()),
               std::make_move_iterator(sets.end()));
  }
  return all;
}

// PRODUCED_AT pins every generated timestamp, so golden outputs are
// reproducible in tests.
Timestamp effective_now() {
  if (const char* env = std::getenv("PRODUCED_AT")) return parse_rfc3339(env);
  return now_utc();
}

RenderFormat to_format(const std::string& name) {
  const auto format = render_format_from_name(name);
  if (!format) throw Error("unknown format \"" + name + "\"");
  return *format;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_list_models(const std::string& format) {
  const auto& models = builtin_models();
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& m : models) {
      arr.push_back({{"id", m.id}, {"name", m.name}, {"items", m.item_count()}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "id               items  name\n";
  for (const auto& m : models) {
    std::string id = m.id;
    id.resize(std::max<std::size_t>(id.size(), 15), ' ');
    const std::string items = std::to_string(m.item_count());
    std::cout << id << "  " << std::string(5 - std::min<std::size_t>(items.size(), 5), ' ')
              << items << "  " << m.name << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& model_source, const std::vector<std::string>& response_paths) {
  const MaturityModel model = load_model_source(model_source);  // throws when invalid
  std::cout << "model " << model.id << ": OK (" << model.levels.size() << " level(s), "
            << model.item_count() << " item(s))\n";

  bool all_ok = true;
  for (const auto& path : response_paths) {
    const auto sets = parse_responses(read_file(path), path);
    for (const auto& rs : sets) {
      try {
        aggregate(model, {&rs, 1}, MissingPolicy::Error);
        std::cout << path << ": respondent \"" << rs.respondent << "\" OK\n";
      } catch (const Error& e) {
        std::cout << path << ": " << e.what() << "\n";
        all_ok = false;
      }
    }
  }
  if (!all_ok) throw Error("response validation failed");
  return 0;
}

int cmd_administer(const std::string& model_source, const std::string& respondent,
                   const std::string& out_path) {
  const MaturityModel model = load_model_source(model_source);
  const bool by_points = model.scale.min_points() >= 0;  // option number == points value

  std::cout << "Administering " << model.id << " (" << model.name << ")\n";
  std::cout << "Respondent: " << respondent << "\n";

  ResponseSet response;
  response.model_id = model.id;
  response.respondent = respondent;

  const std::size_t total = model.item_count();
  std::size_t asked = 0;
  for (const auto& level : model.levels) {
    if (level.items.empty()) continue;
    std::cout << "\nLevel " << level.index << ": " << level.name << "\n";
    for (const auto& item : level.items) {
      ++asked;
      std::cout << "\n[" << asked << "/" << total << "] " << item.id << ". " << item.prompt
                << "\n";
      for (std::size_t i = 0; i < model.scale.options.size(); ++i) {
        const int number = by_points ? model.scale.options[i].points : static_cast<int>(i) + 1;
        std::cout << "  [" << number << "] " << model.scale.options[i].label << "\n";
      }
      const ScaleOption* chosen = nullptr;
      while (chosen == nullptr) {
        std::cout << "> " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          throw Error("end of input before the questionnaire was complete; nothing written");
        }
        const std::string_view t = trim(line);
        bool numeric = !t.empty() && !(t.size() == 1 && t[0] == '-');
        for (std::size_t i = (t.empty() || t[0] != '-') ? 0 : 1; i < t.size(); ++i) {
          if (t[i] < '0' || t[i] > '9') numeric = false;
        }
        if (numeric) {
          try {
            const int number = std::stoi(std::string(t));
            for (std::size_t i = 0; i < model.scale.options.size(); ++i) {
              const int n = by_points ? model.scale.options[i].points : static_cast<int>(i) + 1;
              if (n == number) chosen = &model.scale.options[i];
            }
          } catch (const std::out_of_range&) {
            // an absurdly large number is just another invalid option
          }
        }
        if (chosen == nullptr) {
          std::cout << "invalid option; enter one of the numbers above\n";
        }
      }
      response.answers[item.id] = chosen->label;
    }
  }

  response.recorded_at = effective_now();
  write_file(out_path, serialize_responses(model.id, {response}));
  std::cout << "\nwrote " << out_path << "\n";
  return 0;
}

struct ScoreArgs {
  std::string model_source;
  std::vector<std::string> response_paths;
  std::string format = "text";
  std::string out_path;
  std::string store_dir;
  bool missing_as_minimum = false;
  std::optional<int> flag_threshold;
};

int cmd_score(const ScoreArgs& args) {
  const MaturityModel model = load_model_source(args.model_source);
  const std::vector<ResponseSet> responses = load_response_files(args.response_paths);

  ScoreOptions options;
  options.missing = args.missing_as_minimum ? MissingPolicy::FillMinimum : MissingPolicy::Error;
  options.produced_at = effective_now();
  const ScoreResult result = score_assessment(model, responses, options);
  print_warnings(result.warnings);

  RenderOptions render_options;
  render_options.grouping_flag_threshold = args.flag_threshold;
  std::string bytes = render(result.report, to_format(args.format), render_options);

  if (args.format == "text" && result.report.respondents > 1) {
    bytes += "\nPer-respondent achieved levels:\n";
    const auto levels = per_respondent_levels(model, responses, options.missing);
    for (std::size_t i = 0; i < responses.size(); ++i) {
      bytes += "  " + responses[i].respondent + ": " +
               (levels[i] ? std::to_string(*levels[i]) : std::string("n/a")) + "\n";
    }
  }
  emit(bytes, args.out_path);

  if (!args.store_dir.empty()) {
    fs::create_directories(args.store_dir);
    const AssessmentRecord record = store(args.store_dir, result.report, effective_now());
    std::cerr << "stored " << (fs::path(args.store_dir) / record_filename(record)).string()
              << "\n";
  }
  return 0;
}

int cmd_gap(const std::string& model_source, const std::vector<std::string>& response_paths,
            int target, const std::string& format, bool missing_as_minimum) {
  const MaturityModel model = load_model_source(model_source);
  const std::vector<ResponseSet> responses = load_response_files(response_paths);
  const Aggregated agg = aggregate(
      model, responses, missing_as_minimum ? MissingPolicy::FillMinimum : MissingPolicy::Error);
  print_warnings(agg.warnings);

  const GapPlan plan = gap_analysis(model, agg.points, target);
  if (format == "json") {
    ordered_json upgrades = ordered_json::array();
    for (const auto& u : plan.upgrades) {
      upgrades.push_back({{"item", u.item},
                          {"from", u.from.is_integer() ? ordered_json(u.from.num())
                                                       : ordered_json(u.from.str())},
                          {"to", u.to}});
    }
    const ordered_json j{{"target", plan.target_level},
                         {"deficit_num", plan.deficit.num()},
                         {"deficit_den", plan.deficit.den()},
                         {"upgrades", std::move(upgrades)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (plan.upgrades.empty()) {
    std::cout << "Level " << plan.target_level << " already passes; nothing to raise\n";
  } else {
    std::cout << "Gap to level " << plan.target_level << ": deficit " << plan.deficit.str()
              << " point(s), raise " << plan.upgrades.size() << " item(s):\n";
    for (const auto& u : plan.upgrades) {
      std::cout << "  " << u.item << ": " << u.from.str() << " -> " << u.to << "\n";
    }
  }
  return 0;
}

int cmd_trend(const std::string& store_dir, const std::string& model_source,
              const std::string& format, const std::string& out_path) {
  const std::string model_id = resolve_model_id(model_source);
  const History history = load_history(store_dir, model_id);
  print_warnings(history.warnings);

  std::vector<TrendPoint> points;
  std::size_t skipped = 0;
  for (const auto& entry : history.entries) {
    if (entry.achieved_level) {
      points.push_back({entry.stored_at, *entry.achieved_level});
    } else {
      ++skipped;
    }
  }
  if (skipped > 0) {
    std::cerr << "warning: " << skipped << " record(s) without an achieved level skipped\n";
  }
  if (points.empty()) {
    std::cout << "no assessments\n";
    return 0;
  }
  emit(render_trend(points, to_format(format)), out_path);
  return 0;
}

int cmd_checklist(const std::string& state_path, const std::string& toggle,
                  const std::string& format) {
  const ChecklistTemplate& tmpl = builtin_checklist();
  ChecklistState state;
  if (!state_path.empty() && fs::exists(state_path)) {
    state = parse_checklist_state(read_file(state_path), tmpl, state_path);
  }

  if (!toggle.empty()) {
    const auto slash = toggle.rfind('/');
    if (slash == std::string::npos) {
      throw Error("--toggle expects \"<section>/<item index>\", got \"" + toggle + "\"");
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(toggle.substr(slash + 1), &used);
      if (used != toggle.size() - slash - 1) throw std::invalid_argument(toggle);
    } catch (const std::exception&) {
      throw Error("--toggle expects a numeric item index, got \"" + toggle + "\"");
    }
    toggle_checklist_item(state, tmpl, toggle.substr(0, slash), index, effective_now());
    write_file(state_path, serialize_checklist_state(state));
  }

  const std::size_t total = tmpl.total_items();
  const std::size_t done = done_count(state);
  const Rational percent = completion_fraction(tmpl, state) * Rational(100);

  if (format == "json") {
    ordered_json sections = ordered_json::array();
    for (const auto& section : tmpl.sections) {
      ordered_json items = ordered_json::array();
      for (std::size_t i = 0; i < section.items.size(); ++i) {
        const auto it = state.entries.find({section.name, i});
        const bool item_done = it != state.entries.end() && it->second.done;
        ordered_json j{{"index", i}, {"text", section.items[i]}, {"done", item_done}};
        j["at"] = it != state.entries.end() ? ordered_json(format_rfc3339(it->second.at))
                                            : ordered_json(nullptr);
        items.push_back(std::move(j));
      }
      sections.push_back({{"name", section.name}, {"items", std::move(items)}});
    }
    const ordered_json root{{"sections", std::move(sections)},
                            {"done", done},
                            {"total", total},
                            {"percent", percent.to_double()}};
    std::cout << root.dump(2) << "\n";
    return 0;
  }

  std::cout << "Risk management process checklist\n";
  for (const auto& section : tmpl.sections) {
    std::cout << "\n" << section.name << "\n";
    for (std::size_t i = 0; i < section.items.size(); ++i) {
      const auto it = state.entries.find({section.name, i});
      const bool item_done = it != state.entries.end() && it->second.done;
      std::cout << "  [" << (item_done ? 'x' : ' ') << "] " << i << ". " << section.items[i]
                << "\n";
    }
  }
  std::cout << "\nCompletion: " << done << "/" << total << " (" << percent.decimal(2) << "%)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maturity assessment toolkit: score Likert questionnaires against staged "
               "level thresholds, classify adherence, plan improvements and track history"};
  app.require_subcommand(1);

  std::string model_source;
  std::vector<std::string> response_paths;
  std::string format;
  std::string out_path;
  std::string store_dir;
  std::string respondent;
  std::string state_path;
  std::string toggle;
  bool missing_as_minimum = false;
  int target = 0;
  int flag_threshold = 0;

  auto* list = app.add_subcommand("list-models", "List the bundled instruments");
  list->add_option("--format", format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "Validate a model file and response files");
  validate->add_option("--model", model_source, "builtin:<id> or a model file")->required();
  validate->add_option("--responses", response_paths, "response file(s)");

  auto* administer = app.add_subcommand("administer", "Run the questionnaire interactively");
  administer->add_option("--model", model_source, "builtin:<id> or a model file")->required();
  administer->add_option("--respondent", respondent, "respondent name")->required();
  administer->add_option("--out", out_path, "response file to write")->required();

  auto* score = app.add_subcommand("score", "Score response files and render the report");
  score->add_option("--model", model_source, "builtin:<id> or a model file")->required();
  score->add_option("--responses", response_paths, "response file(s)")->required();
  score->add_option("--format", format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  score->add_option("--out", out_path, "write the report here instead of stdout");
  score->add_option("--store", store_dir, "append the assessment to this record directory");
  score->add_flag("--missing-as-minimum", missing_as_minimum,
                  "substitute the scale minimum for missing answers (with a warning)");
  auto* flag_opt = score->add_option("--flag-threshold", flag_threshold,
                                     "mark grouping totals at or above this value (text output)");

  auto* gap = app.add_subcommand("gap", "Show the minimal upgrade plan for a level");
  gap->add_option("--model", model_source, "builtin:<id> or a model file")->required();
  gap->add_option("--responses", response_paths, "response file(s)")->required();
  gap->add_option("--target", target, "target level")->required();
  gap->add_option("--format", format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  gap->add_flag("--missing-as-minimum", missing_as_minimum,
                "substitute the scale minimum for missing answers (with a warning)");

  auto* trend = app.add_subcommand("trend", "Chart achieved level over stored assessments");
  trend->add_option("--store", store_dir, "record directory")->required();
  trend->add_option("--model", model_source, "builtin:<id>, model file, or model id")->required();
  trend->add_option("--format", format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "svg"}));
  trend->add_option("--out", out_path, "write the chart here instead of stdout");

  auto* checklist = app.add_subcommand("checklist", "Render or update the process checklist");
  checklist->add_option("--state", state_path, "checklist state file");
  checklist->add_option("--toggle", toggle, "flip one item: \"<section>/<index>\"")
      ->needs(checklist->get_option("--state"));
  checklist->add_option("--format", format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(list)) return cmd_list_models(format);
    if (app.got_subcommand(validate)) return cmd_validate(model_source, response_paths);
    if (app.got_subcommand(administer)) return cmd_administer(model_source, respondent, out_path);
    if (app.got_subcommand(score)) {
      ScoreArgs args;
      args.model_source = model_source;
      args.response_paths = response_paths;
      args.format = format;
      args.out_path = out_path;
      args.store_dir = store_dir;
      args.missing_as_minimum = missing_as_minimum;
      if (flag_opt->count() > 0) args.flag_threshold = flag_threshold;
      return cmd_score(args);
    }
    if (app.got_subcommand(gap)) {
      return cmd_gap(model_source, response_paths, target, format, missing_as_minimum);
    }
    if (app.got_subcommand(trend)) return cmd_trend(store_dir, model_source, format, out_path);
    if (app.got_subcommand(checklist)) return cmd_checklist(state_path, toggle, format);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
