#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadprimes/analytic.hpp"
#include "quadprimes/sieve.hpp"

namespace quadprimes::cli {

enum class Format { Table, Records };

/// Everything a command needs besides its positional inputs. Layered as
/// defaults < config file < environment < command-line flags.
struct Settings {
  double tol = 1e-4;
  unsigned threads = 1;
  u64 segment_size = 1ULL << 16;
  u64 max_n = SieveConfig{}.max_n;
  u64 max_domain = SieveConfig{}.max_domain;
  u64 max_sieve_prime = SieveConfig{}.max_sieve_prime;
  u64 max_l_terms = kDefaultLSeriesCap;
  u64 max_primes = kDefaultPrimeBudget;
  std::optional<Format> format;  // unset: per-command default
  std::string store = "quadprimes.records.jsonl";
  bool persist = true;
  bool timestamp = true;
  UpperEndpoint endpoint = UpperEndpoint::Open;

  SieveConfig sieve_config() const;
};

inline constexpr std::string_view kEnvPrefix = "QUADPRIMES_";
inline constexpr std::string_view kDefaultConfigFile = "quadprimes.conf";

/// Recognised keys, in the spelling used by config files. The environment
/// variable is the key upper-cased behind kEnvPrefix, the flag is the key
/// with dashes (budget keys carry a `budget-` prefix).
const std::vector<std::string>& setting_keys();

/// Parses `value` into the field named by `key`. Throws Errc::SpecParseError
/// for an unknown key or a malformed value.
void apply_setting(Settings& s, std::string_view key, std::string_view value);

/// key=value lines; `#` starts a comment, blank lines are ignored.
void apply_config_text(Settings& s, std::string_view text, std::string_view origin = "config");
void apply_config_file(Settings& s, const std::string& path);

using EnvLookup = std::function<const char*(const char*)>;
void apply_environment(Settings& s, const EnvLookup& getenv_fn);

/// Config file chosen by --config, else $QUADPRIMES_CONFIG, else
/// ./quadprimes.conf when it exists.
std::optional<std::string> locate_config(const std::optional<std::string>& flag, const EnvLookup& getenv_fn);

std::string env_name(std::string_view key);
std::string flag_name(std::string_view key);

}  // namespace quadprimes::cli
