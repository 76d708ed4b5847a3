#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "cli/family.hpp"
#include "cli/record.hpp"
#include "cli/settings.hpp"
#include "quadprimes/error.hpp"

namespace quadprimes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInconsistent = 4;

int exit_code(const Error& e) noexcept;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

/// Validates f, sieves, evaluates L(1), the exceptionality block and the
/// main-term comparison. Throws quadprimes::Error.
RunRecord analyze_record(const Settings& s, i64 a, i64 b, i64 c, u64 N);

std::string format_polynomial(i64 a, i64 b, i64 c);

// Each command prints its result, writes one-line diagnostics to err and
// returns the process exit code.
int run_analyze(const Settings& s, const RecordKey& key, bool reuse, Io io);
/// Members are analysed in (a, b, c) order, duplicates once.
int run_scan(const Settings& s, std::vector<Triple> family, const NRule& rule, bool reuse, Io io);
int run_buchstab(const Settings& s, const RecordKey& key, double z, Io io);
int run_lfun(const Settings& s, i64 delta, Io io);

struct VerifyOptions {
  u64 seed = 1;
  u64 count = 200;
  u64 max_n = 100'000;
  i64 delta_range = 2'000;  // class-number check over fundamental delta in (-range, 0)
};
int run_verify(const Settings& s, const VerifyOptions& opt, Io io);

}  // namespace quadprimes::cli
