#include "cli/parse.hpp"

#include <charconv>
#include <cmath>

#include "quadprimes/error.hpp"

namespace quadprimes::cli {
namespace {

[[noreturn]] void bad(std::string_view text, std::string_view what) {
  throw Error(Errc::SpecParseError, std::string(what) + ": cannot parse '" + std::string(text) + "'");
}

template <class T>
bool parse_whole(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

u64 parse_u64(std::string_view text, std::string_view what) {
  text = trim(text);
  if (text.empty() || text.front() == '-') bad(text, what);
  u64 v = 0;
  if (parse_whole(text, v)) return v;
  double d = 0.0;
  if (!parse_whole(text, d) || !std::isfinite(d) || d < 0.0 || d >= 18446744073709551616.0 || d != std::floor(d)) {
    bad(text, what);
  }
  return static_cast<u64>(d);
}

i64 parse_i64(std::string_view text, std::string_view what) {
  text = trim(text);
  i64 v = 0;
  if (text.empty() || !parse_whole(text, v)) bad(text, what);
  return v;
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double d = 0.0;
  if (text.empty() || !parse_whole(text, d) || !std::isfinite(d)) bad(text, what);
  return d;
}

bool parse_bool(std::string_view text, std::string_view what) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  bad(text, what);
}

}  // namespace quadprimes::cli
