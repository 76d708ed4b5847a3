#include "quadprimes/oracle.hpp"

#include "quadprimes/character.hpp"

namespace quadprimes::oracle {

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 least_prime_factor(u64 n) {
  if (n < 2) return n;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

std::vector<i64> domain_points(const AdmissiblePolynomial& f, u64 N) {
  // f is monotone on each side of the vertex; walk out until the value
  // leaves [0, N] for good.
  const i64 vertex = floor_div(-f.b(), 2 * f.a());
  const i128 n_cap = static_cast<i128>(N);
  std::vector<i64> pts;
  auto in_range = [&](i64 n) {
    i128 v = f(n);
    return v >= 0 && v <= n_cap;
  };
  auto past = [&](i64 n) {
    i128 v = f(n);
    return f.a() > 0 ? v > n_cap : v < 0;
  };
  for (i64 n = vertex;; --n) {
    if (in_range(n)) pts.push_back(n);
    if (n < vertex - 1 && past(n)) break;
  }
  for (i64 n = vertex + 1;; ++n) {
    if (in_range(n)) pts.push_back(n);
    if (n > vertex + 2 && past(n)) break;
  }
  return pts;
}

BruteCount brute_force_pi(const AdmissiblePolynomial& f, u64 N) {
  BruteCount out;
  for (i64 n : domain_points(f, N)) {
    ++out.cardinality_a;
    if (is_prime_trial(static_cast<u64>(f(n)))) ++out.pi_f;
  }
  return out;
}

BruteCount brute_force_pi(const AdmissiblePolynomial& f, u64 N, i64 n_lo, i64 n_hi) {
  BruteCount out;
  for (i64 n = n_lo; n <= n_hi; ++n) {
    const i128 v = f(n);
    if (v < 0 || v > static_cast<i128>(N)) continue;
    ++out.cardinality_a;
    if (is_prime_trial(static_cast<u64>(v))) ++out.pi_f;
  }
  return out;
}

u64 brute_force_s(const AdmissiblePolynomial& f, u64 N, double z) {
  u64 count = 0;
  for (i64 n : domain_points(f, N)) {
    const u64 v = static_cast<u64>(f(n));
    // gcd(0, P(z)) = P(z), which is 1 only for z <= 2
    if (v == 0) {
      if (z <= 2.0) ++count;
      continue;
    }
    if (v == 1 || static_cast<double>(least_prime_factor(v)) >= z) ++count;
  }
  return count;
}

u64 brute_force_s_p(const AdmissiblePolynomial& f, u64 N, u64 p) {
  u64 count = 0;
  for (i64 n : domain_points(f, N)) {
    const u64 v = static_cast<u64>(f(n));
    if (v == 0) {
      if (p == 2) ++count;
      continue;
    }
    if (v % p == 0 && least_prime_factor(v) == p) ++count;
  }
  return count;
}

u64 brute_force_a_d(const AdmissiblePolynomial& f, u64 N, u64 d) {
  u64 count = 0;
  for (i64 n : domain_points(f, N)) {
    if (static_cast<u64>(f(n)) % d == 0) ++count;
  }
  return count;
}

i64 brute_force_lambda(i64 delta, u64 n) {
  i64 sum = 0;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) sum += kronecker(delta, static_cast<i64>(d));
  }
  return sum;
}

std::vector<u64> brute_force_roots(const AdmissiblePolynomial& f, u64 m) {
  std::vector<u64> roots;
  for (u64 r = 0; r < m; ++r) {
    const i128 v = f(static_cast<i64>(r));
    i128 rem = v % static_cast<i128>(m);
    if (rem == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace quadprimes::oracle
