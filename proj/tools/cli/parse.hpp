#pragma once

#include <string>
#include <string_view>

#include "quadprimes/arith.hpp"

namespace quadprimes::cli {

// Strict scalar parsers. The whole string must be consumed; failures throw
// Errc::SpecParseError naming `what`. Unsigned values also accept an exact
// integer in exponent form such as 1e8.
u64 parse_u64(std::string_view text, std::string_view what);
i64 parse_i64(std::string_view text, std::string_view what);
double parse_double(std::string_view text, std::string_view what);
bool parse_bool(std::string_view text, std::string_view what);

std::string_view trim(std::string_view s);

}  // namespace quadprimes::cli
