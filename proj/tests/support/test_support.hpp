#pragma once

// Shared helpers for the test suites: scratch directories, a small XML
// well-formedness checker for the SVG output, SVG attribute extraction and
// questionnaire fixtures.

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "riskmat/model.hpp"
#include "riskmat/rational.hpp"

namespace testsup {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("riskmat_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

// Minimal XML well-formedness check: prolog/comments, balanced and properly
// nested tags, quoted attribute values, no stray '<' or unterminated
// entities in character data. Enough to validate the generated SVG.
inline bool xml_well_formed(const std::string& text, std::string* error = nullptr) {
  const auto fail = [&](const std::string& message) {
    if (error != nullptr) *error = message;
    return false;
  };
  std::vector<std::string> stack;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool seen_element = false;

  while (i < n) {
    const char c = text[i];
    if (c == '<') {
      if (text.compare(i, 5, "<?xml") == 0) {
        const auto end = text.find("?>", i);
        if (end == std::string::npos) return fail("unterminated XML declaration");
        i = end + 2;
        continue;
      }
      if (text.compare(i, 4, "<!--") == 0) {
        const auto end = text.find("-->", i);
        if (end == std::string::npos) return fail("unterminated comment");
        i = end + 3;
        continue;
      }
      const bool closing = i + 1 < n && text[i + 1] == '/';
      std::size_t j = i + (closing ? 2 : 1);
      std::size_t name_start = j;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' ||
                       text[j] == '-' || text[j] == '_')) {
        ++j;
      }
      if (j == name_start) return fail("empty tag name at offset " + std::to_string(i));
      const std::string name = text.substr(name_start, j - name_start);
      // scan attributes, honoring quotes
      bool self_closing = false;
      char quote = 0;
      while (j < n) {
        const char t = text[j];
        if (quote != 0) {
          if (t == quote) quote = 0;
        } else if (t == '"' || t == '\'') {
          quote = t;
        } else if (t == '>') {
          break;
        } else if (t == '/' && j + 1 < n && text[j + 1] == '>') {
          self_closing = true;
        }
        ++j;
      }
      if (j >= n) return fail("unterminated tag <" + name);
      if (quote != 0) return fail("unterminated attribute value in <" + name);
      if (closing) {
        if (self_closing) return fail("malformed closing tag </" + name);
        if (stack.empty() || stack.back() != name) {
          return fail("mismatched closing tag </" + name + ">");
        }
        stack.pop_back();
      } else if (!self_closing) {
        stack.push_back(name);
      }
      seen_element = true;
      i = j + 1;
      continue;
    }
    if (c == '>') return fail("stray '>' at offset " + std::to_string(i));
    if (c == '&') {
      std::size_t j = i + 1;
      while (j < n && j < i + 10 && text[j] != ';') ++j;
      if (j >= n || text[j] != ';') return fail("unterminated entity at offset " + std::to_string(i));
      i = j + 1;
      continue;
    }
    ++i;
  }
  if (!stack.empty()) return fail("unclosed element <" + stack.back() + ">");
  if (!seen_element) return fail("no elements");
  return true;
}

// Values of `attr` for every element whose tag body contains `marker`
// (e.g. marker = "class=\"bar\"").
inline std::vector<std::string> svg_attr_values(const std::string& svg, const std::string& marker,
                                                const std::string& attr) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = svg.find('<', pos)) != std::string::npos) {
    const auto end = svg.find('>', pos);
    if (end == std::string::npos) break;
    const std::string tag = svg.substr(pos, end - pos);
    if (tag.find(marker) != std::string::npos) {
      const std::string needle = attr + "=\"";
      const auto a = tag.find(needle);
      if (a != std::string::npos) {
        const auto b = tag.find('"', a + needle.size());
        out.push_back(tag.substr(a + needle.size(), b - a - needle.size()));
      }
    }
    pos = end + 1;
  }
  return out;
}

// A response set answering every item of the model with the same label.
inline riskmat::ResponseSet uniform_response(const riskmat::MaturityModel& model,
                                             const std::string& label,
                                             const std::string& respondent = "r1") {
  riskmat::ResponseSet rs;
  rs.model_id = model.id;
  rs.respondent = respondent;
  rs.recorded_at = 1755000000;
  for (const auto& level : model.levels) {
    for (const auto& item : level.items) rs.answers[item.id] = label;
  }
  return rs;
}

inline const std::string& label_for_points(const riskmat::MaturityModel& model, int points) {
  for (const auto& o : model.scale.options) {
    if (o.points == points) return o.label;
  }
  throw std::runtime_error("no scale option with points " + std::to_string(points));
}

// A response set with every item drawn uniformly from the scale.
inline riskmat::ResponseSet random_response(const riskmat::MaturityModel& model,
                                            std::mt19937& rng,
                                            const std::string& respondent = "r1") {
  std::uniform_int_distribution<std::size_t> pick(0, model.scale.options.size() - 1);
  riskmat::ResponseSet rs;
  rs.model_id = model.id;
  rs.respondent = respondent;
  rs.recorded_at = 1755000000;
  for (const auto& level : model.levels) {
    for (const auto& item : level.items) {
      rs.answers[item.id] = model.scale.options[pick(rng)].label;
    }
  }
  return rs;
}

// Integer answer map (item id -> points) for the pure scoring operations.
inline std::map<std::string, riskmat::Rational> answers_map(
    const riskmat::MaturityModel& model, int points_everywhere) {
  std::map<std::string, riskmat::Rational> out;
  for (const auto& level : model.levels) {
    for (const auto& item : level.items) out[item.id] = riskmat::Rational(points_everywhere);
  }
  return out;
}

}  // namespace testsup
