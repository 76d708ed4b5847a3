#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/record.hpp"

namespace quadprimes::cli {

/// Append-only JSON-lines log of RunRecords. Lines are never rewritten;
/// a lookup returns the most recent record for a key.
class RecordStore {
 public:
  explicit RecordStore(std::string path) : path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

  void append(const RunRecord& r) const;

  /// Every parseable record in file order. Unparseable lines (for example a
  /// torn final write) are skipped and counted in `skipped` when given.
  std::vector<RunRecord> load(std::size_t* skipped = nullptr) const;

  std::optional<RunRecord> find(const RecordKey& key) const;

 private:
  std::string path_;
};

}  // namespace quadprimes::cli
