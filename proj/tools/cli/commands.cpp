#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

#include "cli/store.hpp"
#include "quadprimes/analytic.hpp"
#include "quadprimes/oracle.hpp"
#include "quadprimes/random_poly.hpp"

namespace quadprimes::cli {
namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : "-"; }

std::string pm(double v, double r) { return num(v) + " +- " + num(r); }

void print_table(std::ostream& out, const Rows& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(w - k.size() + 2, ' ') << v << '\n';
}

Format format_or(const Settings& s, Format fallback) { return s.format.value_or(fallback); }

int report(const Error& e, Io io) {
  io.err << "error: " << e.what() << '\n';
  return exit_code(e);
}

int report_internal(const std::exception& e, Io io) {
  io.err << "error: internal: " << e.what() << '\n';
  return kExitInconsistent;
}

void stamp(const Settings& s, RunRecord& r) {
  r.timestamp = s.timestamp ? utc_timestamp() : std::string();
}

Rows analyze_rows(const RunRecord& r) {
  Rows rows = {{"f(x)", format_polynomial(r.a, r.b, r.c)},
               {"N", std::to_string(r.N)},
               {"delta", std::to_string(r.delta)},
               {"pi_f(N)", std::to_string(r.pi_f)},
               {"A", std::to_string(r.cardinality_a)},
               {"X", num(r.x_length)},
               {"V(A)", num(r.v_of_a)},
               {"A V(A)", num(r.main_term)},
               {"relative error", num(r.relative_error)},
               {"L(1, chi)", pm(r.l_one, r.l_one_bound) + " (" + std::to_string(r.l_one_terms) + " terms)"}};
  if (r.beta) {
    rows.emplace_back("beta", pm(*r.beta, r.beta_radius.value_or(0.0)));
    rows.emplace_back("B", num(r.b_cap));
    rows.emplace_back("g(delta)", r.g_delta ? num(*r.g_delta) : "inf");
    rows.emplace_back("hypotheses", *r.hypotheses_hold ? "hold" : "fail");
    rows.emplace_back("theorem bound", num(r.theorem_bound));
    rows.emplace_back("s", num(r.s_diagnostic));
  } else {
    rows.emplace_back("beta", "- (A < 3)");
  }
  rows.emplace_back("version", r.version);
  if (!r.timestamp.empty()) rows.emplace_back("timestamp", r.timestamp);
  return rows;
}

void print_scan_header(std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%6s %6s %6s %12s %8s %10s %10s %14s %14s %12s  %s\n", "a", "b", "c", "N", "status",
                "pi_f", "A", "A V(A)", "rel_error", "beta", "hyp");
  out << buf;
}

void print_scan_row(std::ostream& out, const RunRecord& r) {
  char buf[240];
  if (!r.ok()) {
    std::snprintf(buf, sizeof buf, "%6lld %6lld %6lld %12llu %8s  %s\n", static_cast<long long>(r.a),
                  static_cast<long long>(r.b), static_cast<long long>(r.c), static_cast<unsigned long long>(r.N),
                  "skipped", r.reason.c_str());
  } else {
    std::snprintf(buf, sizeof buf, "%6lld %6lld %6lld %12llu %8s %10llu %10llu %14s %14s %12s  %s\n",
                  static_cast<long long>(r.a), static_cast<long long>(r.b), static_cast<long long>(r.c),
                  static_cast<unsigned long long>(r.N), "ok", static_cast<unsigned long long>(r.pi_f),
                  static_cast<unsigned long long>(r.cardinality_a), num(r.main_term).c_str(),
                  num(r.relative_error).c_str(), num(r.beta).c_str(),
                  r.hypotheses_hold ? (*r.hypotheses_hold ? "hold" : "fail") : "-");
  }
  out << buf;
}

std::optional<RunRecord> cached(const Settings& s, const RecordKey& key) {
  auto hit = RecordStore(s.store).find(key);
  if (hit && hit->ok() && hit->version == toolchain_version() && hit->tol == s.tol) return hit;
  return std::nullopt;
}

}  // namespace

int exit_code(const Error& e) noexcept {
  if (is_validation_error(e.code())) return kExitUsage;
  if (is_budget_error(e.code())) return kExitBudget;
  return kExitInconsistent;
}

std::string format_polynomial(i64 a, i64 b, i64 c) {
  std::string s;
  auto term = [&s](i64 coef, const char* var) {
    if (coef == 0) return;
    const bool neg = coef < 0;
    const u64 mag = neg ? static_cast<u64>(-(coef + 1)) + 1 : static_cast<u64>(coef);
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1 || *var == '\0') s += std::to_string(mag);
    s += var;
  };
  term(a, "x^2");
  term(b, "x");
  term(c, "");
  return s.empty() ? "0" : s;
}

RunRecord analyze_record(const Settings& s, i64 a, i64 b, i64 c, u64 N) {
  const auto f = validate(a, b, c);
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be at least 1");
  const auto sieve = sieve_pi(f, N, s.sieve_config());
  const auto l = l_one(f.delta(), s.tol, s.max_l_terms);
  std::optional<ExceptionalityMetrics> m;
  if (sieve.cardinality_a >= 3) m = metrics(f, N, sieve.cardinality_a, l.value, l.error_bound);
  const auto mt = main_term_report(f, N, sieve, m, s.max_primes);

  RunRecord r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.N = N;
  r.delta = f.delta();
  r.pi_f = sieve.pi_f;
  r.cardinality_a = sieve.cardinality_a;
  r.x_length = enumeration_domain(f, N).x_length;
  r.v_of_a = mt.v_of_a;
  r.main_term = mt.main_term;
  r.relative_error = mt.relative_error;
  r.tol = s.tol;
  r.l_one = l.value;
  r.l_one_bound = l.error_bound;
  r.l_one_terms = l.cutoff;
  if (m) {
    r.beta = m->beta.value;
    r.beta_radius = m->beta.radius;
    r.b_cap = m->b_cap;
    if (std::isfinite(m->g_delta)) r.g_delta = m->g_delta;
    r.hypotheses_hold = m->hypotheses_hold;
    r.theorem_bound = mt.theorem_bound;
    r.s_diagnostic = m->s_diagnostic;
  }
  r.version = toolchain_version();
  return r;
}

int run_analyze(const Settings& s, const RecordKey& key, bool reuse, Io io) {
  try {
    std::optional<RunRecord> rec;
    if (reuse) rec = cached(s, key);
    if (!rec) {
      rec = analyze_record(s, key.a, key.b, key.c, key.N);
      stamp(s, *rec);
      if (s.persist) RecordStore(s.store).append(*rec);
    }
    if (format_or(s, Format::Table) == Format::Records) {
      io.out << to_line(*rec) << '\n';
    } else {
      print_table(io.out, analyze_rows(*rec));
    }
    return kExitOk;
  } catch (const Error& e) {
    return report(e, io);
  } catch (const std::exception& e) {
    return report_internal(e, io);
  }
}

int run_scan(const Settings& s, std::vector<Triple> family, const NRule& rule, bool reuse, Io io) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const bool table = format_or(s, Format::Records) == Format::Table;
  if (table) print_scan_header(io.out);
  try {
    for (const auto& [a, b, c] : family) {
      RecordKey key{a, b, c, rule.kind == NRule::Kind::Fixed ? rule.value : 0};
      RunRecord rec;
      try {
        const auto f = validate(a, b, c);
        key.N = resolve_n(rule, f.delta());
        std::optional<RunRecord> hit;
        if (reuse) hit = cached(s, key);
        if (hit) {
          rec = *hit;
        } else {
          rec = analyze_record(s, a, b, c, key.N);
          stamp(s, rec);
          if (s.persist) RecordStore(s.store).append(rec);
        }
      } catch (const Error& e) {
        if (!is_validation_error(e.code())) throw;
        rec = RunRecord{};
        rec.a = a;
        rec.b = b;
        rec.c = c;
        rec.N = key.N;
        rec.status = "skipped";
        rec.reason = std::string(to_string(e.code()));
        rec.version = toolchain_version();
        stamp(s, rec);
        io.err << "skipped (" << a << "," << b << "," << c << "): " << e.what() << '\n';
      }
      if (table) {
        print_scan_row(io.out, rec);
      } else {
        io.out << to_line(rec) << '\n';
      }
      io.out.flush();
    }
    return kExitOk;
  } catch (const Error& e) {
    io.out.flush();
    return report(e, io);
  } catch (const std::exception& e) {
    io.out.flush();
    return report_internal(e, io);
  }
}

int run_buchstab(const Settings& s, const RecordKey& key, double z, Io io) {
  try {
    const auto f = validate(key.a, key.b, key.c);
    if (key.N == 0) throw Error(Errc::InvalidArgument, "N must be at least 1");
    const auto rep = buchstab(f, key.N, z, s.endpoint, s.sieve_config());
    const char* ep = rep.endpoint == UpperEndpoint::Open ? "open" : "closed";
    if (format_or(s, Format::Table) == Format::Records) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["kind"] = "buchstab";
      j["a"] = key.a;
      j["b"] = key.b;
      j["c"] = key.c;
      j["N"] = key.N;
      j["z"] = rep.z;
      j["upper"] = rep.upper;
      j["endpoint"] = ep;
      j["cardinality_a"] = rep.a_count;
      j["s_a_z"] = rep.s_a_z;
      j["s_a_upper"] = rep.s_a_upper;
      j["s1"] = rep.s1;
      j["s2"] = rep.s2;
      j["s3"] = rep.s3;
      j["identity_residual"] = rep.identity_residual;
      j["per_prime"] = rep.per_prime;
      j["version"] = toolchain_version();
      io.out << j.dump() << '\n';
    } else {
      print_table(io.out, {{"f(x)", format_polynomial(key.a, key.b, key.c)},
                           {"N", std::to_string(key.N)},
                           {"z", num(rep.z)},
                           {"sqrt N", num(rep.upper) + " (" + ep + ")"},
                           {"A", std::to_string(rep.a_count)},
                           {"S(A, z)", std::to_string(rep.s_a_z)},
                           {"S(A, sqrt N)", std::to_string(rep.s_a_upper)},
                           {"S1", std::to_string(rep.s1)},
                           {"S2", std::to_string(rep.s2)},
                           {"S3", std::to_string(rep.s3)},
                           {"primes summed", std::to_string(rep.per_prime.size())},
                           {"residual", std::to_string(rep.identity_residual)}});
    }
    if (rep.identity_residual != 0) {
      io.err << "error: Buchstab identity residual " << rep.identity_residual << '\n';
      return kExitInconsistent;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report(e, io);
  } catch (const std::exception& e) {
    return report_internal(e, io);
  }
}

int run_lfun(const Settings& s, i64 delta, Io io) {
  try {
    const auto l = l_one(delta, s.tol, s.max_l_terms);
    std::optional<u64> h;
    std::optional<double> oracle_value;
    if (delta < 0 && delta > -1'000'000 && is_fundamental(delta)) {
      h = class_number(delta);
      oracle_value = l_one_class_number_oracle(delta);
    }
    // the closed form is itself a double, hence the rounding allowance
    const bool agrees = !oracle_value || std::abs(l.value - *oracle_value) <= l.error_bound + 1e-12;
    if (format_or(s, Format::Table) == Format::Records) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["kind"] = "lfun";
      j["delta"] = delta;
      j["tol"] = s.tol;
      j["l_one"] = l.value;
      j["l_one_bound"] = l.error_bound;
      j["l_one_terms"] = l.cutoff;
      j["class_number"] = h ? Json(*h) : Json(nullptr);
      j["class_number_value"] = oracle_value ? Json(*oracle_value) : Json(nullptr);
      j["version"] = toolchain_version();
      io.out << j.dump() << '\n';
    } else {
      Rows rows = {{"delta", std::to_string(delta)},
                   {"fundamental", is_fundamental(delta) ? "yes" : "no"},
                   {"L(1, chi)", pm(l.value, l.error_bound)},
                   {"terms", std::to_string(l.cutoff)}};
      if (h) {
        rows.emplace_back("h(delta)", std::to_string(*h));
        rows.emplace_back("2 pi h / (w sqrt|delta|)", num(*oracle_value));
        rows.emplace_back("agreement", agrees ? "within bound" : "OUTSIDE bound");
      }
      print_table(io.out, rows);
    }
    if (!agrees) {
      io.err << "error: series and class number formula disagree beyond the error bound\n";
      return kExitInconsistent;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report(e, io);
  } catch (const std::exception& e) {
    return report_internal(e, io);
  }
}

namespace {

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  u64 cases = 0;
  std::optional<std::string> failure;

  void record(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && !failure) failure = what();
  }
};

std::string describe(const AdmissiblePolynomial& f, u64 N) {
  return "f = " + format_polynomial(f.a(), f.b(), f.c()) + ", N = " + std::to_string(N);
}

}  // namespace

int run_verify(const Settings& s, const VerifyOptions& opt, Io io) {
  try {
    Check pi{"pi_f and A against trial division"}, buch{"Buchstab identity and S(A, z)"},
        rho_check{"rho(d) against residue enumeration"}, sp{"S(A_p, p) against trial division"},
        ad{"A_d against direct count"}, lfun{"L(1) against class number formula"};
    oracle::PolyGenerator gen(opt.seed);
    const auto cfg = s.sieve_config();
    for (u64 t = 0; t < opt.count; ++t) {
      const auto f = gen.next();
      const u64 N = gen.uniform(1, std::max<u64>(1, opt.max_n));
      const auto r = sieve_pi(f, N, cfg);
      const auto brute = oracle::brute_force_pi(f, N);
      pi.record(r.pi_f == brute.pi_f && r.cardinality_a == brute.cardinality_a, [&] { return describe(f, N); });

      const double root = std::sqrt(static_cast<double>(N));
      if (root >= 2.0) {
        const double z = 2.0 + (root - 2.0) * static_cast<double>(gen.uniform(0, 1000)) / 1000.0;
        for (auto ep : {UpperEndpoint::Open, UpperEndpoint::Closed}) {
          const auto rep = buchstab(r, N, z, ep);
          buch.record(rep.identity_residual == 0 && rep.s_a_z == oracle::brute_force_s(f, N, z),
                      [&] { return describe(f, N) + ", z = " + num(z); });
        }
      }
      for (u32 p : primes_up_to(std::min<u64>(r.sieve_limit, 50))) {
        sp.record(s_p_count(r, p) == oracle::brute_force_s_p(f, N, p),
                  [&] { return describe(f, N) + ", p = " + std::to_string(p); });
      }
      if (t < 20) {
        for (u64 d = 1; d <= 300; ++d) {
          rho_check.record(rho(f, d) == rho_by_enumeration(f, d),
                           [&] { return describe(f, N) + ", d = " + std::to_string(d); });
        }
        for (u64 d = 1; d <= 100; ++d) {
          ad.record(a_d_count(f, N, d).a_d == oracle::brute_force_a_d(f, N, d),
                    [&] { return describe(f, N) + ", d = " + std::to_string(d); });
        }
      }
    }
    for (i64 delta = -3; delta > -opt.delta_range; --delta) {
      if (!is_fundamental(delta)) continue;
      const auto l = l_one(delta, s.tol, s.max_l_terms);
      lfun.record(std::abs(l.value - l_one_class_number_oracle(delta)) <= l.error_bound + 1e-12,
                  [&] { return "delta = " + std::to_string(delta); });
    }

    bool all = true;
    const bool records = format_or(s, Format::Table) == Format::Records;
    for (const Check* c : {&pi, &buch, &sp, &rho_check, &ad, &lfun}) {
      all = all && !c->failure;
      if (records) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["kind"] = "verify";
        j["check"] = c->name;
        j["cases"] = c->cases;
        j["pass"] = !c->failure;
        j["counterexample"] = c->failure ? Json(*c->failure) : Json(nullptr);
        io.out << j.dump() << '\n';
      } else {
        io.out << (c->failure ? "[FAIL] " : "[PASS] ") << c->name << " (" << c->cases << " cases)";
        if (c->failure) io.out << ": " << *c->failure;
        io.out << '\n';
      }
    }
    return all ? kExitOk : kExitInconsistent;
  } catch (const Error& e) {
    return report(e, io);
  } catch (const std::exception& e) {
    return report_internal(e, io);
  }
}

}  // namespace quadprimes::cli
