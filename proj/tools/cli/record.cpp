#include "cli/record.hpp"

#include <chrono>
#include <ctime>

#include "quadprimes/error.hpp"

#ifndef QUADPRIMES_VERSION
#define QUADPRIMES_VERSION "unknown"
#endif

namespace quadprimes::cli {
namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
T req(const Json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) {
    throw Error(Errc::SpecParseError, std::string("record field '") + field + "' missing");
  }
  try {
    return j.at(field).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::SpecParseError, std::string("record field '") + field + "' has the wrong type");
  }
}

template <class T>
std::optional<T> maybe(const Json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return req<T>(j, field);
}

}  // namespace

Json to_json(const RunRecord& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["a"] = r.a;
  j["b"] = r.b;
  j["c"] = r.c;
  j["N"] = r.N;
  j["status"] = r.status;
  if (!r.ok()) {
    j["reason"] = r.reason;
  } else {
    j["delta"] = r.delta;
    j["pi_f"] = r.pi_f;
    j["cardinality_a"] = r.cardinality_a;
    j["x_length"] = r.x_length;
    j["v_of_a"] = r.v_of_a;
    j["main_term"] = r.main_term;
    j["relative_error"] = opt(r.relative_error);
    j["tol"] = r.tol;
    j["l_one"] = r.l_one;
    j["l_one_bound"] = r.l_one_bound;
    j["l_one_terms"] = r.l_one_terms;
    j["beta"] = opt(r.beta);
    j["beta_radius"] = opt(r.beta_radius);
    j["b_cap"] = opt(r.b_cap);
    j["g_delta"] = opt(r.g_delta);
    j["hypotheses_hold"] = opt(r.hypotheses_hold);
    j["theorem_bound"] = opt(r.theorem_bound);
    j["s_diagnostic"] = opt(r.s_diagnostic);
  }
  j["version"] = r.version;
  if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
  return j;
}

RunRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::SpecParseError, "record is not an object");
  if (req<int>(j, "schema") != kSchemaVersion) throw Error(Errc::SpecParseError, "unsupported record schema");
  RunRecord r;
  r.a = req<i64>(j, "a");
  r.b = req<i64>(j, "b");
  r.c = req<i64>(j, "c");
  r.N = req<u64>(j, "N");
  r.status = req<std::string>(j, "status");
  if (!r.ok()) {
    r.reason = req<std::string>(j, "reason");
  } else {
    r.delta = req<i64>(j, "delta");
    r.pi_f = req<u64>(j, "pi_f");
    r.cardinality_a = req<u64>(j, "cardinality_a");
    r.x_length = req<double>(j, "x_length");
    r.v_of_a = req<double>(j, "v_of_a");
    r.main_term = req<double>(j, "main_term");
    r.relative_error = maybe<double>(j, "relative_error");
    r.tol = req<double>(j, "tol");
    r.l_one = req<double>(j, "l_one");
    r.l_one_bound = req<double>(j, "l_one_bound");
    r.l_one_terms = req<u64>(j, "l_one_terms");
    r.beta = maybe<double>(j, "beta");
    r.beta_radius = maybe<double>(j, "beta_radius");
    r.b_cap = maybe<double>(j, "b_cap");
    r.g_delta = maybe<double>(j, "g_delta");
    r.hypotheses_hold = maybe<bool>(j, "hypotheses_hold");
    r.theorem_bound = maybe<double>(j, "theorem_bound");
    r.s_diagnostic = maybe<double>(j, "s_diagnostic");
  }
  r.version = req<std::string>(j, "version");
  r.timestamp = maybe<std::string>(j, "timestamp").value_or("");
  return r;
}

std::string to_line(const RunRecord& r) { return to_json(r).dump(); }

RunRecord parse_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SpecParseError, std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

bool same_data(RunRecord x, RunRecord y) {
  x.timestamp.clear();
  y.timestamp.clear();
  return x == y;
}

std::string toolchain_version() {
  std::string v = "quadprimes " QUADPRIMES_VERSION;
#if defined(__clang__)
  v += " clang " __clang_version__;
#elif defined(__GNUC__)
  v += " gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__) + "." +
       std::to_string(__GNUC_PATCHLEVEL__);
#endif
  return v;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace quadprimes::cli
