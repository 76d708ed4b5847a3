#include "cli/settings.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/parse.hpp"
#include "quadprimes/error.hpp"

namespace quadprimes::cli {

SieveConfig Settings::sieve_config() const {
  SieveConfig cfg;
  cfg.segment_size = segment_size;
  cfg.threads = threads;
  cfg.max_n = max_n;
  cfg.max_domain = max_domain;
  cfg.max_sieve_prime = max_sieve_prime;
  return cfg;
}

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = {
      "tol",       "threads",     "segment_size", "max_n",  "max_domain",   "max_sieve_prime", "max_l_terms",
      "max_primes", "format",     "store",        "persist", "timestamp",   "endpoint"};
  return keys;
}

void apply_setting(Settings& s, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "tol") {
    const double t = parse_double(value, key);
    if (!(t > 0.0)) throw Error(Errc::SpecParseError, "tol must be positive");
    s.tol = t;
  } else if (key == "threads") {
    const u64 t = parse_u64(value, key);
    if (t > 1024) throw Error(Errc::SpecParseError, "threads must be at most 1024");
    s.threads = static_cast<unsigned>(t);
  } else if (key == "segment_size") {
    const u64 v = parse_u64(value, key);
    if (v == 0) throw Error(Errc::SpecParseError, "segment_size must be positive");
    s.segment_size = v;
  } else if (key == "max_n") {
    s.max_n = parse_u64(value, key);
  } else if (key == "max_domain") {
    s.max_domain = parse_u64(value, key);
  } else if (key == "max_sieve_prime") {
    s.max_sieve_prime = parse_u64(value, key);
  } else if (key == "max_l_terms") {
    s.max_l_terms = parse_u64(value, key);
  } else if (key == "max_primes") {
    s.max_primes = parse_u64(value, key);
  } else if (key == "format") {
    if (value == "table") {
      s.format = Format::Table;
    } else if (value == "records") {
      s.format = Format::Records;
    } else {
      throw Error(Errc::SpecParseError, "format must be table or records");
    }
  } else if (key == "store") {
    if (value.empty()) throw Error(Errc::SpecParseError, "store path is empty");
    s.store = std::string(value);
  } else if (key == "persist") {
    s.persist = parse_bool(value, key);
  } else if (key == "timestamp") {
    s.timestamp = parse_bool(value, key);
  } else if (key == "endpoint") {
    if (value == "open") {
      s.endpoint = UpperEndpoint::Open;
    } else if (value == "closed") {
      s.endpoint = UpperEndpoint::Closed;
    } else {
      throw Error(Errc::SpecParseError, "endpoint must be open or closed");
    }
  } else {
    throw Error(Errc::SpecParseError, "unknown setting '" + std::string(key) + "'");
  }
}

void apply_config_text(Settings& s, std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(lineno);
    if (eq == std::string_view::npos) throw Error(Errc::SpecParseError, where + ": expected key=value");
    try {
      apply_setting(s, trim(v.substr(0, eq)), v.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(Errc::SpecParseError, where + ": " + e.detail());
    }
  }
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SpecParseError, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(s, buf.str(), path);
}

std::string env_name(std::string_view key) {
  std::string name(kEnvPrefix);
  for (char ch : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return name;
}

std::string flag_name(std::string_view key) {
  std::string name = "--";
  if (key.starts_with("max_")) name += "budget-";
  for (char ch : key) name += ch == '_' ? '-' : ch;
  return name;
}

void apply_environment(Settings& s, const EnvLookup& getenv_fn) {
  for (const auto& key : setting_keys()) {
    const std::string var = env_name(key);
    if (const char* v = getenv_fn(var.c_str())) {
      try {
        apply_setting(s, key, v);
      } catch (const Error& e) {
        throw Error(Errc::SpecParseError, var + ": " + e.detail());
      }
    }
  }
}

std::optional<std::string> locate_config(const std::optional<std::string>& flag, const EnvLookup& getenv_fn) {
  if (flag) return flag;
  if (const char* v = getenv_fn(env_name("config").c_str()); v && *v) return std::string(v);
  if (std::filesystem::exists(kDefaultConfigFile)) return std::string(kDefaultConfigFile);
  return std::nullopt;
}

}  // namespace quadprimes::cli
