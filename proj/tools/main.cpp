#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/parse.hpp"

using namespace quadprimes;
using namespace quadprimes::cli;

namespace {

const char* setting_help(const std::string& key) {
  if (key == "tol") return "L(1) tolerance (default 1e-4)";
  if (key == "threads") return "sieve worker threads, 0 = all cores (default 1)";
  if (key == "segment_size") return "sieve segment length in n (default 65536)";
  if (key == "max_n") return "largest accepted N (default 1e14)";
  if (key == "max_domain") return "largest accepted domain size A (default 4e9)";
  if (key == "max_sieve_prime") return "largest sieving prime (default 1e7)";
  if (key == "max_l_terms") return "largest L-series cutoff (default 1e9)";
  if (key == "max_primes") return "largest prime in Euler products (default 1e8)";
  if (key == "format") return "table or records";
  if (key == "store") return "record log path (default quadprimes.records.jsonl)";
  if (key == "persist") return "append results to the record log (default true)";
  if (key == "timestamp") return "stamp records with UTC time (default true)";
  if (key == "endpoint") return "Buchstab upper endpoint: open or closed (default open)";
  return "";
}

struct Common {
  std::map<std::string, std::string> values;  // key -> raw value
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::string config;
  CLI::Option* config_opt = nullptr;
  bool no_store = false;
  bool no_timestamp = false;

  void attach(CLI::App* sub) {
    const auto& keys = setting_keys();
    for (const auto& key : keys) {
      options.emplace_back(key, sub->add_option(flag_name(key), values[key], setting_help(key)));
    }
    config_opt = sub->add_option("--config", config, "key=value config file");
    sub->add_flag("--no-store", no_store, "do not append to the record log");
    sub->add_flag("--no-timestamp", no_timestamp, "omit timestamps (byte-identical output)");
  }
};

Settings resolve_settings(std::vector<Common*> commons) {
  auto env = [](const char* name) -> const char* { return std::getenv(name); };
  std::optional<std::string> config_flag;
  for (auto* c : commons) {
    if (c->config_opt && c->config_opt->count() > 0) config_flag = c->config;
  }
  Settings s;
  if (auto path = locate_config(config_flag, env)) apply_config_file(s, *path);
  apply_environment(s, env);
  for (auto* c : commons) {
    for (const auto& [key, opt] : c->options) {
      if (opt->count() > 0) apply_setting(s, key, c->values.at(key));
    }
    if (c->no_store) s.persist = false;
    if (c->no_timestamp) s.timestamp = false;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact prime counts and sieve diagnostics for quadratic polynomials"};
  app.set_version_flag("--version", toolchain_version());
  app.require_subcommand(1);
  // Common settings may be given once per subcommand; each holds its own copy.
  std::vector<Common> commons(5);

  i64 a = 0, b = 0, c = 0;
  std::string n_text;
  bool reuse = false;

  auto* analyze = app.add_subcommand("analyze", "count primes of f on 0 <= f(n) <= N and compare with A V(A)");
  analyze->add_option("-a", a, "x^2 coefficient")->required();
  analyze->add_option("-b", b, "x coefficient")->required();
  analyze->add_option("-c", c, "constant")->required();
  analyze->add_option("-N", n_text, "bound on f(n)")->required();
  analyze->add_flag("--reuse", reuse, "print a stored record for the same inputs instead of recomputing");
  commons[0].attach(analyze);

  std::string ra, rb, rc, family_file;
  auto* scan = app.add_subcommand("scan", "analyze every admissible member of a polynomial family");
  scan->add_option("-a", ra, "a or lo:hi");
  scan->add_option("-b", rb, "b or lo:hi");
  scan->add_option("-c", rc, "c or lo:hi");
  scan->add_option("--file", family_file, "family file, one 'a b c' per line");
  scan->add_option("-N", n_text, "N rule: K | fixed:K | delta:K | power:E")->required();
  scan->add_flag("--reuse", reuse, "reuse stored records with matching inputs");
  commons[1].attach(scan);

  double z = 0.0;
  auto* buch = app.add_subcommand("buchstab", "Buchstab decomposition of S(A, z) from one sieve pass");
  buch->add_option("-a", a, "x^2 coefficient")->required();
  buch->add_option("-b", b, "x coefficient")->required();
  buch->add_option("-c", c, "constant")->required();
  buch->add_option("-N", n_text, "bound on f(n)")->required();
  buch->add_option("--z", z, "sifting level, 2 <= z <= sqrt N")->required();
  commons[2].attach(buch);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "cross-check the library against brute-force oracles");
  std::string v_seed, v_count, v_max_n, v_range;
  verify->add_option("--seed", v_seed, "random seed (default 1)");
  verify->add_option("--count", v_count, "random polynomials (default 200)");
  verify->add_option("--max-n", v_max_n, "largest random N (default 1e5)");
  verify->add_option("--delta-range", v_range, "class number check over delta in (-R, 0) (default 2000)");
  commons[3].attach(verify);

  i64 delta = 0;
  auto* lfun = app.add_subcommand("lfun", "evaluate L(1, chi_delta) with a rigorous error bound");
  auto* delta_opt = lfun->add_option("--delta", delta, "discriminant");
  auto* la = lfun->add_option("-a", a, "take delta from f");
  auto* lb = lfun->add_option("-b", b);
  auto* lc = lfun->add_option("-c", c);
  la->needs(lb, lc)->excludes(delta_opt);
  commons[4].attach(lfun);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Io io{std::cout, std::cerr};
  Settings s;
  u64 N = 0;
  try {
    std::vector<Common*> ptrs;
    for (auto& cm : commons) ptrs.push_back(&cm);
    s = resolve_settings(ptrs);
    if (!n_text.empty() && !scan->parsed()) N = parse_u64(n_text, "N");
    if (!v_seed.empty()) vopt.seed = parse_u64(v_seed, "seed");
    if (!v_count.empty()) vopt.count = parse_u64(v_count, "count");
    if (!v_max_n.empty()) vopt.max_n = parse_u64(v_max_n, "max-n");
    if (!v_range.empty()) {
      const u64 r = parse_u64(v_range, "delta-range");
      if (r > 1'000'000) throw Error(Errc::InvalidArgument, "delta-range must be at most 1e6");
      vopt.delta_range = static_cast<i64>(r);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }

  if (analyze->parsed()) return run_analyze(s, {a, b, c, N}, reuse, io);
  if (buch->parsed()) return run_buchstab(s, {a, b, c, N}, z, io);
  if (verify->parsed()) return run_verify(s, vopt, io);
  if (lfun->parsed()) {
    if (la->count() > 0) {
      const i128 d = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
      if (d < INT64_MIN || d > INT64_MAX) {
        std::cerr << "error: Overflow: discriminant exceeds 64 bits\n";
        return kExitBudget;
      }
      delta = static_cast<i64>(d);
    } else if (delta_opt->count() == 0) {
      std::cerr << "error: lfun needs --delta or -a -b -c\n";
      return kExitUsage;
    }
    return run_lfun(s, delta, io);
  }

  // scan
  try {
    std::vector<Triple> family;
    const bool ranges = !ra.empty() || !rb.empty() || !rc.empty();
    if (!family_file.empty() == ranges) {
      throw Error(Errc::SpecParseError, "scan needs either --file or all of -a -b -c");
    }
    if (ranges) {
      if (ra.empty() || rb.empty() || rc.empty()) throw Error(Errc::SpecParseError, "scan needs all of -a -b -c");
      family = expand_family(parse_coeff_range(ra, "a"), parse_coeff_range(rb, "b"), parse_coeff_range(rc, "c"));
    } else {
      family = read_family_file(family_file);
    }
    return run_scan(s, family, parse_n_rule(n_text), reuse, io);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}
