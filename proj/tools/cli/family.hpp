#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "quadprimes/arith.hpp"

namespace quadprimes::cli {

using Triple = std::array<i64, 3>;

/// Inclusive coefficient range written `v` or `lo:hi`; lo > hi is empty.
struct CoeffRange {
  i64 lo = 0, hi = 0;
};
CoeffRange parse_coeff_range(std::string_view text, std::string_view what);

/// Largest family a scan will enumerate.
inline constexpr u64 kMaxFamilySize = 10'000'000ULL;

/// Cartesian product of the three ranges, sorted by (a, b, c).
/// Throws Errc::BudgetExceeded past kMaxFamilySize members.
std::vector<Triple> expand_family(const CoeffRange& a, const CoeffRange& b, const CoeffRange& c);

/// One member per line as `a b c` or `a,b,c`; `#` comments. Sorted by
/// (a, b, c) with duplicates removed.
std::vector<Triple> parse_family_text(std::string_view text, std::string_view origin = "family");
std::vector<Triple> read_family_file(const std::string& path);

/// How N is chosen for each member:
///   `K` or `fixed:K`  N = K
///   `delta:K`         N = K |delta|
///   `power:E`         N = ceil(|delta|^E)
struct NRule {
  enum class Kind { Fixed, DeltaMultiple, DeltaPower };
  Kind kind = Kind::Fixed;
  u64 value = 0;
  double exponent = 0.0;
};
NRule parse_n_rule(std::string_view text);
/// Throws Errc::RangeExceeded when N would not fit 64 bits.
u64 resolve_n(const NRule& rule, i64 delta);

}  // namespace quadprimes::cli
