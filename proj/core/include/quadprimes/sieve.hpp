#pragma once

#include <cmath>
#include <map>

#include "quadprimes/arith.hpp"
#include "quadprimes/polynomial.hpp"

namespace quadprimes {

/// Resource budgets and layout for the value sieve. Outputs never depend on
/// `segment_size` or `threads`.
struct SieveConfig {
  u64 segment_size = 1ULL << 16;
  unsigned threads = 1;  // 0 = hardware concurrency
  u64 max_n = 100'000'000'000'000ULL;          // largest accepted N (1e14)
  u64 max_domain = 4'000'000'000ULL;           // largest accepted A
  u64 max_sieve_prime = 10'000'000ULL;         // largest sieving prime
};

/// Exact counts over the enumeration domain of (f, N).
///
/// Every n in the domain lands in exactly one bucket: f(n) = 0, f(n) = 1,
/// lpf(f(n)) = q for a prime q <= sieve_limit (the histogram), or the
/// terminal bucket of values with no prime factor <= sieve_limit. Since
/// sieve_limit = floor(sqrt N), terminal values are primes.
struct SieveResult {
  u64 pi_f = 0;
  u64 cardinality_a = 0;
  u64 sieve_limit = 0;
  std::map<u64, u64> lpf_histogram;
  u64 zero_count = 0;
  u64 unit_count = 0;
  u64 large_prime_count = 0;
  u64 min_large_prime = 0;  // smallest terminal value, 0 when the bucket is empty

  friend bool operator==(const SieveResult&, const SieveResult&) = default;
};

/// Segmented sieve over f(n): per segment each prime p <= sqrt(N) strikes
/// the progressions n = r (mod p) for the roots r of f mod p, dividing p
/// out completely. Throws Errc::BudgetExceeded when N, A or sqrt(N) exceed
/// the configured budgets.
SieveResult sieve_pi(const AdmissiblePolynomial& f, u64 N, const SieveConfig& config = {});

/// The same counts restricted to the n of the domain lying in `window`.
/// sieve_limit stays floor(sqrt N), so the buckets keep their meaning.
SieveResult sieve_pi(const AdmissiblePolynomial& f, u64 N, IntRange window, const SieveConfig& config = {});

/// S(A, z) = #{n : gcd(f(n), P(z)) = 1} with P(z) the product of primes < z.
/// gcd(0, m) = m, so zeros count only when z <= 2. Throws
/// Errc::ResolutionExceeded when a prime below z falls outside what the
/// result resolves.
u64 s_count(const SieveResult& result, double z);

/// S(A_p, p) = #{n : p | f(n) and no prime q < p divides f(n)}.
u64 s_p_count(const SieveResult& result, u64 p);
u64 s_p_count(const AdmissiblePolynomial& f, u64 N, u64 p, const SieveConfig& config = {});

struct CongruenceCount {
  u64 d = 1;
  u64 a_d = 0;
  u64 rho_d = 0;
  double r_d = 0.0;  // a_d - (rho(d)/d) A

  bool within_bound() const noexcept { return std::abs(r_d) <= static_cast<double>(rho_d) + 1e-9; }
};

/// A_d = #{n in domain : d | f(n)}, counted by striding the domain over the
/// roots of f mod d.
CongruenceCount a_d_count(const AdmissiblePolynomial& f, u64 N, u64 d);

}  // namespace quadprimes
