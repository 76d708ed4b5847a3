#include "quadprimes/analytic.hpp"

#include <cmath>
#include <string>

#include "compensated_sum.hpp"
#include "quadprimes/error.hpp"

namespace quadprimes {

namespace {

// Largest integer strictly below a real bound z >= 2.
u64 largest_below(double z, u64 budget) {
  if (!(z >= 0.0)) throw Error(Errc::InvalidArgument, "bound must be non-negative");
  const double limit = std::ceil(z) - 1.0;
  if (limit > static_cast<double>(budget)) {
    throw Error(Errc::BudgetExceeded, "prime bound " + std::to_string(z));
  }
  return limit < 0 ? 0 : static_cast<u64>(limit);
}

u64 rho_of_prime(const AdmissiblePolynomial& f, u64 p) {
  if (p == 2 || f.a() % static_cast<i64>(p) == 0) return roots_mod_prime(f, p).size();
  return static_cast<u64>(1 + legendre(mod_floor(f.delta(), p), p));
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

double v_product(const AdmissiblePolynomial& f, double z, u64 prime_budget) {
  if (!(z >= 2.0)) throw Error(Errc::InvalidArgument, "z must be at least 2");
  u128 num = 1, den = 1;
  bool exact = true;
  long double approx = 1.0L;
  for (u32 p : primes_up_to(largest_below(z, prime_budget))) {
    const u64 keep = p - rho_of_prime(f, p);
    if (exact) {
      u128 n2, d2;
      if (!__builtin_mul_overflow(num, static_cast<u128>(keep), &n2) &&
          !__builtin_mul_overflow(den, static_cast<u128>(p), &d2)) {
        const u128 g = n2 == 0 ? d2 : gcd128(n2, d2);
        num = n2 / g;
        den = d2 / g;
        continue;
      }
      exact = false;
      approx = static_cast<long double>(num) / static_cast<long double>(den);
    }
    approx *= static_cast<long double>(keep) / static_cast<long double>(p);
  }
  if (exact) return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
  return static_cast<double>(approx);
}

double w_product(i64 delta, double u, u64 prime_budget) {
  if (!(u >= 2.0)) throw Error(Errc::InvalidArgument, "u must be at least 2");
  long double w = 1.0L;
  for (u32 p : primes_up_to(largest_below(u, prime_budget))) {
    const long double inv = 1.0L / p;
    w *= (1.0L - inv) * (1.0L - kronecker(delta, p) * inv);
  }
  return static_cast<double>(w);
}

double delta_sum(i64 delta, double x, u64 a_count, u64 prime_budget) {
  if (!(x >= 2.0)) throw Error(Errc::InvalidArgument, "x must be at least 2");
  if (x > static_cast<double>(a_count)) return 0.0;
  if (a_count > prime_budget) throw Error(Errc::BudgetExceeded, "A = " + std::to_string(a_count));
  detail::CompensatedSum sum;
  for (u32 p : primes_up_to(a_count)) {
    if (static_cast<double>(p) < x) continue;
    const int lam = 1 + kronecker(delta, p);
    if (lam != 0) sum.add(static_cast<long double>(lam) / p);
  }
  return static_cast<double>(sum.value());
}

SiftedLambdaDiagnostic sifted_lambda_diagnostic(i64 delta, double u, u64 y, u64 x, double l_one_value,
                                                u64 budget) {
  if (!(u >= 2.0) || y < 1 || y > x) throw Error(Errc::InvalidArgument, "need u >= 2 and 1 <= y <= x");
  if (x > budget) throw Error(Errc::BudgetExceeded, "x = " + std::to_string(x));

  // smallest prime factor table on [0, x]
  std::vector<u32> spf(x + 1, 0);
  for (u64 i = 2; i <= x; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= x; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<u32>(i);
    }
  }
  detail::CompensatedSum sum;
  for (u64 n = y; n <= x; ++n) {
    if (n > 1 && static_cast<double>(spf[n]) < u) continue;
    u64 lam = 1;
    for (u64 m = n; m > 1 && lam != 0;) {
      const u64 p = spf[m];
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      const int chi = kronecker(delta, static_cast<i64>(p));
      if (chi == 1) lam *= static_cast<u64>(e + 1);
      else if (chi == -1 && e % 2 == 1) lam = 0;
    }
    if (lam != 0) sum.add(static_cast<long double>(lam) / static_cast<long double>(n));
  }
  SiftedLambdaDiagnostic out;
  out.sifted_sum = static_cast<double>(sum.value());
  out.main_expression = w_product(delta, u) * l_one_value * std::log(static_cast<double>(x) / static_cast<double>(y));
  return out;
}

BuchstabReport buchstab(const SieveResult& sieve, u64 N, double z, UpperEndpoint endpoint) {
  const u64 root = isqrt(N);
  const double upper = std::sqrt(static_cast<double>(N));
  if (!(z >= 2.0) || z > upper) {
    throw Error(Errc::InvalidArgument, "need 2 <= z <= sqrt(N), got z = " + std::to_string(z));
  }
  if (sieve.sieve_limit < root) throw Error(Errc::ResolutionExceeded, "sieve does not cover sqrt(N)");

  BuchstabReport rep;
  rep.z = z;
  rep.upper = upper;
  rep.endpoint = endpoint;
  rep.a_count = sieve.cardinality_a;

  // Sift bound for the right-hand S: primes p with p*p < N (open) or p*p <= N (closed).
  const bool square = root * root == N;
  double upper_sift;
  if (endpoint == UpperEndpoint::Closed) {
    upper_sift = static_cast<double>(root) + 1.0;
  } else {
    upper_sift = square ? static_cast<double>(root) : static_cast<double>(root) + 0.5;
  }
  rep.s_a_z = s_count(sieve, z);
  rep.s_a_upper = s_count(sieve, upper_sift);

  const double a = static_cast<double>(sieve.cardinality_a);
  const double s1_end = a / (z * z);
  u64 total = 0;
  for (u32 p : primes_up_to(root)) {
    const double pd = static_cast<double>(p);
    if (pd < z || pd >= upper_sift) continue;
    const u64 s = s_p_count(sieve, p);
    rep.per_prime.emplace_back(p, s);
    total += s;
    if (pd <= s1_end) {
      rep.s1 += s;
    } else if (pd <= a) {
      rep.s2 += s;
    } else {
      rep.s3 += s;
    }
  }
  rep.identity_residual = static_cast<i64>(rep.s_a_z) - static_cast<i64>(rep.s_a_upper) - static_cast<i64>(total);
  return rep;
}

BuchstabReport buchstab(const AdmissiblePolynomial& f, u64 N, double z, UpperEndpoint endpoint,
                        const SieveConfig& config) {
  if (!(z >= 2.0) || z > std::sqrt(static_cast<double>(N))) {
    throw Error(Errc::InvalidArgument, "need 2 <= z <= sqrt(N), got z = " + std::to_string(z));
  }
  return buchstab(sieve_pi(f, N, config), N, z, endpoint);
}

MainTermReport main_term_report(const AdmissiblePolynomial& f, [[maybe_unused]] u64 N, const SieveResult& sieve,
                                const std::optional<ExceptionalityMetrics>& metrics, u64 prime_budget) {
  MainTermReport rep;
  rep.a_count = sieve.cardinality_a;
  rep.pi_f = sieve.pi_f;
  if (metrics && metrics->beta.value > 0) rep.theorem_bound = std::exp(-std::sqrt(metrics->beta.value) / 6.0);
  if (sieve.cardinality_a == 0) {
    rep.status = MainTermStatus::EmptyDomain;
    return rep;
  }
  // V(A) for A < 2 is the empty product.
  rep.v_of_a = sieve.cardinality_a < 2 ? 1.0 : v_product(f, static_cast<double>(sieve.cardinality_a), prime_budget);
  if (rep.v_of_a == 0.0) throw Error(Errc::DegenerateMainTerm, "V(A) = 0");
  rep.main_term = static_cast<double>(sieve.cardinality_a) * rep.v_of_a;
  rep.relative_error = (static_cast<double>(sieve.pi_f) - rep.main_term) / rep.main_term;
  return rep;
}

}  // namespace quadprimes
