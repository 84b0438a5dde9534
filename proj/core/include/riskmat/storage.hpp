#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskmat/report.hpp"
#include "riskmat/scoring.hpp"

namespace riskmat {

// One stored assessment. `id` is the content hash of the canonical json
// report, so identical reports share an id; records are immutable once
// written and history is append-only.
struct AssessmentRecord {
  std::string id;
  Timestamp stored_at = 0;
  AssessmentReport report;

  friend bool operator==(const AssessmentRecord&, const AssessmentRecord&) = default;
};

std::string report_content_id(const AssessmentReport& report);

// "<stored_at>_<id>.json"
std::string record_filename(const AssessmentRecord& record);

// Writes one record file via temp-file-and-rename. Re-storing the same
// report at the same second is a no-op (the file already holds these bytes).
AssessmentRecord store(const std::filesystem::path& record_dir, const AssessmentReport& report,
                       Timestamp stored_at);

struct RecordSet {
  std::vector<AssessmentRecord> records;  // sorted by (stored_at, id)
  std::vector<std::string> warnings;      // one entry per skipped corrupt file
};

// Loads every record of `model_id` in the directory. Unreadable or corrupt
// files are skipped with a warning entry, never a failure.
RecordSet load_records(const std::filesystem::path& record_dir, std::string_view model_id);

struct HistoryEntry {
  Timestamp stored_at = 0;
  std::string id;
  std::optional<int> achieved_level;
};

struct History {
  std::vector<HistoryEntry> entries;  // ascending by (stored_at, id)
  std::vector<std::string> warnings;
};

History load_history(const std::filesystem::path& record_dir, std::string_view model_id);

}  // namespace riskmat
