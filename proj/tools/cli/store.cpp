#include "cli/store.hpp"

#include <fstream>

#include "quadprimes/error.hpp"

namespace quadprimes::cli {

void RecordStore::append(const RunRecord& r) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(Errc::InvalidArgument, "cannot open record log " + path_);
  out << to_line(r) << '\n';
  out.flush();
  if (!out) throw Error(Errc::InvalidArgument, "write to record log " + path_ + " failed");
}

std::vector<RunRecord> RecordStore::load(std::size_t* skipped) const {
  std::vector<RunRecord> records;
  std::size_t bad = 0;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(parse_line(line));
    } catch (const Error&) {
      ++bad;
    }
  }
  if (skipped) *skipped = bad;
  return records;
}

std::optional<RunRecord> RecordStore::find(const RecordKey& key) const {
  std::optional<RunRecord> found;
  for (auto& r : load()) {
    if (r.key() == key) found = std::move(r);
  }
  return found;
}

}  // namespace quadprimes::cli
