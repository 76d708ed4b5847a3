#include "cli/family.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/parse.hpp"
#include "quadprimes/error.hpp"

namespace quadprimes::cli {

CoeffRange parse_coeff_range(std::string_view text, std::string_view what) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const i64 v = parse_i64(text, what);
    return {v, v};
  }
  return {parse_i64(text.substr(0, colon), what), parse_i64(text.substr(colon + 1), what)};
}

std::vector<Triple> expand_family(const CoeffRange& a, const CoeffRange& b, const CoeffRange& c) {
  auto width = [](const CoeffRange& r) -> u128 {
    return r.lo > r.hi ? 0 : static_cast<u128>(static_cast<i128>(r.hi) - r.lo + 1);
  };
  const u128 wa = width(a), wb = width(b), wc = width(c);
  if (wa == 0 || wb == 0 || wc == 0) return {};
  if (wa > kMaxFamilySize || wb > kMaxFamilySize || wc > kMaxFamilySize || wa * wb * wc > kMaxFamilySize) {
    throw Error(Errc::BudgetExceeded, "family has more than " + std::to_string(kMaxFamilySize) + " members");
  }
  std::vector<Triple> out;
  out.reserve(static_cast<std::size_t>(wa * wb * wc));
  for (i64 x = a.lo;; ++x) {
    for (i64 y = b.lo;; ++y) {
      for (i64 z = c.lo;; ++z) {
        out.push_back({x, y, z});
        if (z == c.hi) break;
      }
      if (y == b.hi) break;
    }
    if (x == a.hi) break;
  }
  return out;
}

std::vector<Triple> parse_family_text(std::string_view text, std::string_view origin) {
  std::vector<Triple> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(lineno);
    if (tok.size() != 3) throw Error(Errc::SpecParseError, where + ": expected three coefficients");
    out.push_back({parse_i64(tok[0], where), parse_i64(tok[1], where), parse_i64(tok[2], where)});
    if (out.size() > kMaxFamilySize) throw Error(Errc::BudgetExceeded, "family file too long");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Triple> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SpecParseError, "cannot read family file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_text(buf.str(), path);
}

NRule parse_n_rule(std::string_view text) {
  text = trim(text);
  NRule rule;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    rule.value = parse_u64(text, "N");
    return rule;
  }
  const auto kind = text.substr(0, colon), arg = text.substr(colon + 1);
  if (kind == "fixed") {
    rule.value = parse_u64(arg, "N");
  } else if (kind == "delta") {
    rule.kind = NRule::Kind::DeltaMultiple;
    rule.value = parse_u64(arg, "N rule multiplier");
  } else if (kind == "power") {
    rule.kind = NRule::Kind::DeltaPower;
    rule.exponent = parse_double(arg, "N rule exponent");
    if (!(rule.exponent > 0.0)) throw Error(Errc::SpecParseError, "N rule exponent must be positive");
  } else {
    throw Error(Errc::SpecParseError, "unknown N rule '" + std::string(kind) + "'");
  }
  return rule;
}

u64 resolve_n(const NRule& rule, i64 delta) {
  const u64 mag = delta < 0 ? static_cast<u64>(-(delta + 1)) + 1 : static_cast<u64>(delta);
  switch (rule.kind) {
    case NRule::Kind::Fixed:
      return rule.value;
    case NRule::Kind::DeltaMultiple: {
      const u128 n = static_cast<u128>(mag) * rule.value;
      if (n > ~u64{0}) throw Error(Errc::RangeExceeded, "N = K |delta| exceeds 64 bits");
      return static_cast<u64>(n);
    }
    case NRule::Kind::DeltaPower: {
      const long double n = std::ceil(std::pow(static_cast<long double>(mag), static_cast<long double>(rule.exponent)));
      if (!(n < 18446744073709551616.0L)) throw Error(Errc::RangeExceeded, "N = |delta|^E exceeds 64 bits");
      return static_cast<u64>(n);
    }
  }
  return rule.value;
}

}  // namespace quadprimes::cli
