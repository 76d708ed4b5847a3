#include "quadprimes/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "quadprimes/error.hpp"

namespace quadprimes {

namespace {

struct SievePrime {
  u32 p;
  u32 root_count;
  u32 roots[2];
};

struct Segment {
  i64 lo;
  u64 len;
};

// Per-worker totals; merged by integer addition so order never matters.
struct Tally {
  u64 pi_f = 0;
  u64 zero = 0;
  u64 unit = 0;
  u64 large = 0;
  u64 min_large = std::numeric_limits<u64>::max();
  std::vector<u64> hist;  // indexed like the sieve-prime table
};

constexpr u32 kNoFactor = std::numeric_limits<u32>::max();

class SegmentSieve {
 public:
  SegmentSieve(const AdmissiblePolynomial& f, const std::vector<SievePrime>& primes, u64 max_len)
      : f_(f), primes_(primes), cofactor_(max_len), lpf_(max_len), factors_(max_len) {}

  void run(const Segment& seg, Tally& tally) {
    const u64 len = seg.len;
    for (u64 i = 0; i < len; ++i) {
      cofactor_[i] = static_cast<u64>(f_(seg.lo + static_cast<i64>(i)));
      lpf_[i] = kNoFactor;
      factors_[i] = 0;
    }
    for (u32 j = 0; j < primes_.size(); ++j) {
      const SievePrime& sp = primes_[j];
      const u64 p = sp.p;
      for (u32 k = 0; k < sp.root_count; ++k) {
        u64 i = mod_floor(static_cast<i128>(sp.roots[k]) - seg.lo, p);
        for (; i < len; i += p) {
          u64 v = cofactor_[i];
          if (v == 0) continue;  // f(n) = 0 is divisible by everything
          if (lpf_[i] == kNoFactor) lpf_[i] = j;
          do {
            v /= p;
            if (factors_[i] < 2) ++factors_[i];
          } while (v % p == 0);
          cofactor_[i] = v;
        }
      }
    }
    for (u64 i = 0; i < len; ++i) {
      const u64 v = cofactor_[i];
      if (lpf_[i] == kNoFactor) {
        if (v == 0) {
          ++tally.zero;
        } else if (v == 1) {
          ++tally.unit;
        } else {
          ++tally.large;
          ++tally.pi_f;
          tally.min_large = std::min(tally.min_large, v);
        }
      } else {
        ++tally.hist[lpf_[i]];
        if (factors_[i] == 1 && v == 1) ++tally.pi_f;
      }
    }
  }

 private:
  const AdmissiblePolynomial& f_;
  const std::vector<SievePrime>& primes_;
  std::vector<u64> cofactor_;
  std::vector<u32> lpf_;
  std::vector<unsigned char> factors_;  // prime factors with multiplicity, saturating at 2
};

std::vector<SievePrime> sieve_primes(const AdmissiblePolynomial& f, u64 limit) {
  std::vector<SievePrime> out;
  for (u32 p : primes_up_to(limit)) {
    RootSet rs = roots_mod_prime(f, p);
    if (rs.size() > 2) {
      throw Error(Errc::InvalidArgument, "rho(" + std::to_string(p) + ") > 2 for an admissible polynomial");
    }
    SievePrime sp{p, static_cast<u32>(rs.size()), {0, 0}};
    for (std::size_t k = 0; k < rs.size(); ++k) sp.roots[k] = static_cast<u32>(rs.roots[k]);
    out.push_back(sp);
  }
  return out;
}

SieveResult sieve_intervals(const AdmissiblePolynomial& f, u64 N, const std::vector<IntRange>& intervals,
                            const SieveConfig& config) {
  if (N > config.max_n) throw Error(Errc::BudgetExceeded, "N = " + std::to_string(N));
  if (config.segment_size == 0) throw Error(Errc::InvalidArgument, "segment size must be positive");
  u64 size = 0;
  for (const IntRange& r : intervals) size += r.size();
  if (size > config.max_domain) throw Error(Errc::BudgetExceeded, "domain size " + std::to_string(size));
  const u64 limit = isqrt(N);
  if (limit > config.max_sieve_prime) throw Error(Errc::BudgetExceeded, "sieve limit " + std::to_string(limit));

  SieveResult result;
  result.cardinality_a = size;
  result.sieve_limit = limit;
  if (size == 0) return result;

  const std::vector<SievePrime> primes = sieve_primes(f, limit);

  std::vector<Segment> segments;
  for (const IntRange& r : intervals) {
    for (i64 lo = r.lo; lo <= r.hi;) {
      const u64 len = std::min<u64>(config.segment_size, static_cast<u64>(r.hi - lo) + 1);
      segments.push_back({lo, len});
      if (r.hi - lo < static_cast<i64>(len)) break;
      lo += static_cast<i64>(len);
    }
  }

  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, segments.size()));

  std::vector<Tally> tallies(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    Tally& tally = tallies[w];
    tally.hist.assign(primes.size(), 0);
    SegmentSieve sieve(f, primes, std::min<u64>(config.segment_size, size));
    for (std::size_t i = next.fetch_add(1); i < segments.size(); i = next.fetch_add(1)) {
      sieve.run(segments[i], tally);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  u64 min_large = std::numeric_limits<u64>::max();
  std::vector<u64> hist(primes.size(), 0);
  for (const Tally& t : tallies) {
    result.pi_f += t.pi_f;
    result.zero_count += t.zero;
    result.unit_count += t.unit;
    result.large_prime_count += t.large;
    min_large = std::min(min_large, t.min_large);
    for (std::size_t j = 0; j < hist.size() && j < t.hist.size(); ++j) hist[j] += t.hist[j];
  }
  result.min_large_prime = result.large_prime_count == 0 ? 0 : min_large;
  for (std::size_t j = 0; j < hist.size(); ++j) {
    if (hist[j] != 0) result.lpf_histogram.emplace(primes[j].p, hist[j]);
  }
  return result;
}

}  // namespace

SieveResult sieve_pi(const AdmissiblePolynomial& f, u64 N, const SieveConfig& config) {
  if (N > config.max_n) throw Error(Errc::BudgetExceeded, "N = " + std::to_string(N));
  return sieve_intervals(f, N, enumeration_domain(f, N).intervals, config);
}

SieveResult sieve_pi(const AdmissiblePolynomial& f, u64 N, IntRange window, const SieveConfig& config) {
  if (N > config.max_n) throw Error(Errc::BudgetExceeded, "N = " + std::to_string(N));
  std::vector<IntRange> clipped;
  for (const IntRange& r : enumeration_domain(f, N).intervals) {
    const IntRange c{std::max(r.lo, window.lo), std::min(r.hi, window.hi)};
    if (c.lo <= c.hi) clipped.push_back(c);
  }
  return sieve_intervals(f, N, clipped, config);
}

u64 s_count(const SieveResult& result, double z) {
  // Buckets above the resolution are only decidable when every terminal
  // value is itself >= z.
  const bool resolved = z <= static_cast<double>(result.sieve_limit) + 1.0 || result.large_prime_count == 0 ||
                        z <= static_cast<double>(result.min_large_prime);
  if (!resolved) {
    throw Error(Errc::ResolutionExceeded,
                "z = " + std::to_string(z) + " beyond sieve limit " + std::to_string(result.sieve_limit));
  }
  u64 count = result.unit_count + result.large_prime_count;
  if (z <= 2.0) count += result.zero_count;
  for (auto it = result.lpf_histogram.rbegin(); it != result.lpf_histogram.rend(); ++it) {
    if (static_cast<double>(it->first) < z) break;
    count += it->second;
  }
  return count;
}

u64 s_p_count(const SieveResult& result, u64 p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  if (p > result.sieve_limit) {
    if (result.large_prime_count == 0 || p < result.min_large_prime) return 0;
    throw Error(Errc::ResolutionExceeded, "p = " + std::to_string(p));
  }
  u64 count = 0;
  if (auto it = result.lpf_histogram.find(p); it != result.lpf_histogram.end()) count = it->second;
  if (p == 2) count += result.zero_count;
  return count;
}

u64 s_p_count(const AdmissiblePolynomial& f, u64 N, u64 p, const SieveConfig& config) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  return s_p_count(sieve_pi(f, N, config), p);
}

CongruenceCount a_d_count(const AdmissiblePolynomial& f, u64 N, u64 d) {
  const EnumerationDomain dom = enumeration_domain(f, N);
  const RootSet roots = roots_mod(f, d);
  CongruenceCount out;
  out.d = d;
  out.rho_d = roots.size();
  const i64 m = static_cast<i64>(d);
  for (const IntRange& r : dom.intervals) {
    for (u64 root : roots.roots) {
      const i64 res = static_cast<i64>(root);
      // #{n in [lo, hi] : n = res (mod d)}
      out.a_d += static_cast<u64>(floor_div(r.hi - res, m) - floor_div(r.lo - 1 - res, m));
    }
  }
  out.r_d = static_cast<double>(out.a_d) -
            static_cast<double>(out.rho_d) / static_cast<double>(d) * static_cast<double>(dom.cardinality_a);
  return out;
}

}  // namespace quadprimes
