#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quadprimes/arith.hpp"
#include "quadprimes/character.hpp"
#include "quadprimes/polynomial.hpp"
#include "quadprimes/sieve.hpp"

namespace quadprimes {

/// Largest prime the Euler products and prime sums will enumerate.
inline constexpr u64 kDefaultPrimeBudget = 100'000'000ULL;

/// V(z) = prod_{p < z} (1 - rho(p)/p). Accumulated as an exact fraction while
/// it fits 128 bits, then in extended precision.
double v_product(const AdmissiblePolynomial& f, double z, u64 prime_budget = kDefaultPrimeBudget);

/// W(u) = prod_{p < u} (1 - 1/p)(1 - chi_delta(p)/p).
double w_product(i64 delta, double u, u64 prime_budget = kDefaultPrimeBudget);

/// delta(x) = sum over primes x <= p <= A of lambda(p)/p, lambda(p) = 1 + chi(p).
double delta_sum(i64 delta, double x, u64 a_count, u64 prime_budget = kDefaultPrimeBudget);

/// Sum of lambda(n)/n over y <= n <= x with n free of primes below u, and the
/// comparison expression W(u) L(1) log(x/y). Diagnostic only: the two are not
/// claimed to satisfy any inequality here.
struct SiftedLambdaDiagnostic {
  double sifted_sum = 0.0;
  double main_expression = 0.0;
};
SiftedLambdaDiagnostic sifted_lambda_diagnostic(i64 delta, double u, u64 y, u64 x, double l_one_value,
                                                u64 budget = 10'000'000ULL);

/// Whether the largest sifting prime is included on the right of the
/// identity S(A,z) - S(A,w) = sum_{z <= p < w} S(A_p, p) with w = sqrt N.
/// Open sifts primes < sqrt N on the left and sums p < sqrt N; Closed sifts
/// primes <= sqrt N and sums p <= sqrt N.
enum class UpperEndpoint { Open, Closed };

struct BuchstabReport {
  double z = 0.0;
  double upper = 0.0;  // sqrt N
  UpperEndpoint endpoint = UpperEndpoint::Open;
  u64 a_count = 0;
  u64 s_a_z = 0;
  u64 s_a_upper = 0;
  std::vector<std::pair<u64, u64>> per_prime;  // (p, S(A_p, p)) for every prime in range
  u64 s1 = 0;  // z <= p <= A/z^2
  u64 s2 = 0;  // A/z^2 < p <= A
  u64 s3 = 0;  // A < p, up to the endpoint
  i64 identity_residual = 0;
};

/// Buchstab decomposition from a single sieve pass. Requires 2 <= z <= sqrt N
/// (Errc::InvalidArgument otherwise).
BuchstabReport buchstab(const AdmissiblePolynomial& f, u64 N, double z,
                        UpperEndpoint endpoint = UpperEndpoint::Open, const SieveConfig& config = {});
BuchstabReport buchstab(const SieveResult& sieve, u64 N, double z, UpperEndpoint endpoint = UpperEndpoint::Open);

enum class MainTermStatus { Ok, EmptyDomain };

struct MainTermReport {
  u64 a_count = 0;
  double v_of_a = 0.0;
  double main_term = 0.0;  // A V(A)
  u64 pi_f = 0;
  std::optional<double> relative_error;  // (pi_f - main_term) / main_term
  std::optional<double> theorem_bound;   // exp(-sqrt(beta)/6), beta > 0 only
  MainTermStatus status = MainTermStatus::Ok;
};

/// Compares pi_f with A V(A). Reporting only. An empty domain yields a
/// report flagged EmptyDomain; V(A) = 0 throws Errc::DegenerateMainTerm.
MainTermReport main_term_report(const AdmissiblePolynomial& f, u64 N, const SieveResult& sieve,
                                const std::optional<ExceptionalityMetrics>& metrics,
                                u64 prime_budget = kDefaultPrimeBudget);

}  // namespace quadprimes
