#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "quadprimes/arith.hpp"

namespace quadprimes::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RecordKey {
  i64 a = 0, b = 0, c = 0;
  u64 N = 0;
  friend auto operator<=>(const RecordKey&, const RecordKey&) = default;
};

/// One analysed (f, N). A skipped record carries only the key, `status` =
/// "skipped" and the error name in `reason`.
struct RunRecord {
  i64 a = 0, b = 0, c = 0;
  u64 N = 0;
  std::string status = "ok";
  std::string reason;

  i64 delta = 0;
  u64 pi_f = 0;
  u64 cardinality_a = 0;
  double x_length = 0.0;
  double v_of_a = 0.0;
  double main_term = 0.0;
  std::optional<double> relative_error;  // unset on an empty domain

  double tol = 0.0;
  double l_one = 0.0;
  double l_one_bound = 0.0;
  u64 l_one_terms = 0;

  // exceptionality block, unset when A < 3
  std::optional<double> beta;
  std::optional<double> beta_radius;
  std::optional<double> b_cap;
  std::optional<double> g_delta;  // also unset when g is infinite
  std::optional<bool> hypotheses_hold;
  std::optional<double> theorem_bound;
  std::optional<double> s_diagnostic;

  std::string version;
  std::string timestamp;  // empty when disabled; never compared

  bool ok() const noexcept { return status == "ok"; }
  RecordKey key() const noexcept { return {a, b, c, N}; }
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

Json to_json(const RunRecord& r);
/// Throws Errc::SpecParseError on a missing field or a schema other than 1.
RunRecord record_from_json(const Json& j);

/// Single-line serialisation used by the record log and the records format.
std::string to_line(const RunRecord& r);
RunRecord parse_line(const std::string& line);

/// Equality with timestamps ignored.
bool same_data(RunRecord x, RunRecord y);

std::string toolchain_version();
std::string utc_timestamp();

}  // namespace quadprimes::cli
