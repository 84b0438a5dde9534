#include "riskmat/storage.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "riskmat/error.hpp"
#include "riskmat/hash.hpp"

namespace riskmat {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string report_content_id(const AssessmentReport& report) {
  return fnv1a64_hex(render(report, RenderFormat::Json));
}

std::string record_filename(const AssessmentRecord& record) {
  return format_rfc3339(record.stored_at) + "_" + record.id + ".json";
}

namespace {

std::string serialize_record(const AssessmentRecord& record) {
  ordered_json root;
  root["stored_at"] = format_rfc3339(record.stored_at);
  root["id"] = record.id;
  root["report"] = ordered_json::parse(render(record.report, RenderFormat::Json));
  return root.dump(2) + "\n";
}

AssessmentRecord parse_record(const std::string& text, const std::string& context) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(context + ": malformed JSON: " + e.what());
  }
  if (!root.is_object() || !root.contains("stored_at") || !root.contains("id") ||
      !root.contains("report")) {
    throw Error(context + ": expected {stored_at, id, report}");
  }
  AssessmentRecord record;
  record.stored_at = parse_rfc3339(root["stored_at"].get<std::string>());
  record.id = root["id"].get<std::string>();
  record.report = parse_report(root["report"].dump(), context);
  if (report_content_id(record.report) != record.id) {
    throw Error(context + ": content id mismatch (file tampered or truncated)");
  }
  return record;
}

}  // namespace

AssessmentRecord store(const fs::path& record_dir, const AssessmentReport& report,
                       Timestamp stored_at) {
  if (!fs::is_directory(record_dir)) {
    throw Error("record directory \"" + record_dir.string() + "\" does not exist");
  }

  AssessmentRecord record;
  record.id = report_content_id(report);
  record.stored_at = stored_at;
  record.report = report;

  const fs::path target = record_dir / record_filename(record);
  if (fs::exists(target)) {
    // same second, same content hash: these bytes are already on disk
    return record;
  }

  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write \"" + tmp.string() + "\"");
    out << serialize_record(record);
    out.flush();
    if (!out) throw Error("write failed for \"" + tmp.string() + "\"");
  }
  fs::rename(tmp, target);
  return record;
}

RecordSet load_records(const fs::path& record_dir, std::string_view model_id) {
  if (!fs::is_directory(record_dir)) {
    throw Error("record directory \"" + record_dir.string() + "\" does not exist");
  }

  RecordSet out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(record_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      out.warnings.push_back("skipped unreadable file \"" + file.string() + "\"");
      continue;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      AssessmentRecord record = parse_record(text, file.filename().string());
      if (record.report.model_id == model_id) {
        out.records.push_back(std::move(record));
      }
    } catch (const std::exception& e) {
      out.warnings.push_back(std::string("skipped corrupt record: ") + e.what());
    }
  }

  std::sort(out.records.begin(), out.records.end(),
            [](const AssessmentRecord& a, const AssessmentRecord& b) {
              if (a.stored_at != b.stored_at) return a.stored_at < b.stored_at;
              return a.id < b.id;
            });
  return out;
}

History load_history(const fs::path& record_dir, std::string_view model_id) {
  RecordSet records = load_records(record_dir, model_id);
  History history;
  history.warnings = std::move(records.warnings);
  for (const auto& record : records.records) {
    history.entries.push_back({record.stored_at, record.id, record.report.achieved_level});
  }
  return history;
}

}  // namespace riskmat
