#pragma once

// Slow reference computations used to cross-check the library. Nothing here
// shares a code path with the sieve, the interval solver or the root finder.

#include <vector>

#include "quadprimes/arith.hpp"
#include "quadprimes/polynomial.hpp"

namespace quadprimes::oracle {

bool is_prime_trial(u64 n);

/// Smallest prime factor by trial division; 0 for n = 0, 1 for n = 1.
u64 least_prime_factor(u64 n);

/// Every n with 0 <= f(n) <= N, found by walking outward from the vertex.
std::vector<i64> domain_points(const AdmissiblePolynomial& f, u64 N);

struct BruteCount {
  u64 pi_f = 0;
  u64 cardinality_a = 0;
};

/// pi_f and A over [n_lo, n_hi] intersected with the domain (whole domain by default).
BruteCount brute_force_pi(const AdmissiblePolynomial& f, u64 N);
BruteCount brute_force_pi(const AdmissiblePolynomial& f, u64 N, i64 n_lo, i64 n_hi);

/// S(A, z) by trial factoring every value (primes p < z sift).
u64 brute_force_s(const AdmissiblePolynomial& f, u64 N, double z);

/// S(A_p, p) by trial factoring every value.
u64 brute_force_s_p(const AdmissiblePolynomial& f, u64 N, u64 p);

/// #{n in domain : d | f(n)}.
u64 brute_force_a_d(const AdmissiblePolynomial& f, u64 N, u64 d);

/// lambda(n) by summing the Kronecker symbol over all divisors.
i64 brute_force_lambda(i64 delta, u64 n);

/// Roots of f mod m by scanning residues.
std::vector<u64> brute_force_roots(const AdmissiblePolynomial& f, u64 m);

}  // namespace quadprimes::oracle
