#include "quadprimes/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "quadprimes/error.hpp"

namespace quadprimes {

namespace {

u64 abs_u64(i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); }

i128 floor_div128(i128 a, i128 m) {
  i128 q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

// q(n) = A2 n^2 + B1 n + C0, exactly.
i128 eval_quadratic(i128 A2, i128 B1, i128 C0, i128 n) {
  return checked_add(checked_add(checked_mul(checked_mul(A2, n), n), checked_mul(B1, n)), C0);
}

// Integer interval {n : A2 n^2 + B1 n + C0 <= 0} for A2 > 0, if non-empty.
std::optional<IntRange> convex_sublevel(i128 A2, i128 B1, i128 C0) {
  i128 disc = checked_add(checked_mul(B1, B1), -checked_mul(checked_mul(4, A2), C0));
  if (disc < 0) return std::nullopt;
  i128 s = static_cast<i128>(isqrt(static_cast<u128>(disc)));
  // The real roots lie in [(-B1-s-1)/(2A2), (-B1+s+1)/(2A2)].
  i128 lo = floor_div128(-B1 - s - 1, 2 * A2);
  i128 hi = floor_div128(-B1 + s + 1, 2 * A2) + 1;
  while (lo <= hi && eval_quadratic(A2, B1, C0, lo) > 0) ++lo;
  while (hi >= lo && eval_quadratic(A2, B1, C0, hi) > 0) --hi;
  if (lo > hi) return std::nullopt;
  return IntRange{narrow_i64(lo), narrow_i64(hi)};
}

// outer \ inner, where inner is a sub-interval of outer (or absent).
std::vector<IntRange> subtract(const std::optional<IntRange>& outer, const std::optional<IntRange>& inner) {
  std::vector<IntRange> out;
  if (!outer) return out;
  if (!inner) {
    out.push_back(*outer);
    return out;
  }
  if (inner->lo > outer->lo) out.push_back({outer->lo, std::min(outer->hi, inner->lo - 1)});
  if (inner->hi < outer->hi) out.push_back({std::max(outer->lo, inner->hi + 1), outer->hi});
  return out;
}

}  // namespace

i128 AdmissiblePolynomial::operator()(i64 n) const {
  return eval_quadratic(a_, b_, c_, n);
}

u64 AdmissiblePolynomial::eval_mod(i64 n, u64 m) const {
  if (m == 1) return 0;
  u64 x = mod_floor(n, m);
  u64 acc = mod_floor(a_, m);
  acc = (mulmod(acc, x, m) + mod_floor(b_, m)) % m;
  acc = (mulmod(acc, x, m) + mod_floor(c_, m)) % m;
  return acc;
}

AdmissiblePolynomial validate(i64 a, i64 b, i64 c) {
  if (a == 0) throw Error(Errc::ZeroLeadingCoefficient);
  if (gcd(gcd(abs_u64(a), abs_u64(b)), abs_u64(c)) != 1) throw Error(Errc::CommonFactor);
  // a + b may overflow i64; parity is all that matters.
  bool ab_odd = ((a ^ b) & 1) != 0;
  bool c_odd = (c & 1) != 0;
  if (!ab_odd && !c_odd) throw Error(Errc::ParityObstruction);
  i128 d = checked_add(checked_mul(b, b), -checked_mul(checked_mul(4, a), c));
  i64 delta = narrow_i64(d);
  if (is_perfect_square(delta)) throw Error(Errc::SquareDiscriminant, "discriminant " + std::to_string(delta));
  return AdmissiblePolynomial(a, b, c, delta);
}

double interval_length(const AdmissiblePolynomial& f, u64 N) {
  const long double a = static_cast<long double>(f.a());
  const long double delta = static_cast<long double>(f.delta());
  const long double n = static_cast<long double>(N);
  // 4|a|N compared with |delta| exactly
  const i128 four_a_n = checked_mul(checked_mul(4, static_cast<i128>(abs_u64(f.a()))), static_cast<i128>(N));
  const i128 abs_delta = static_cast<i128>(abs_u64(f.delta()));

  if (f.delta() < 0) {
    if (f.a() > 0 && four_a_n > abs_delta) return static_cast<double>(std::sqrt(delta + 4 * a * n) / a);
    return 0.0;
  }
  if (f.a() > 0 || four_a_n <= abs_delta) {
    return static_cast<double>(4 * n / (std::sqrt(delta + 4 * a * n) + std::sqrt(delta)));
  }
  return static_cast<double>(std::sqrt(delta) / std::fabs(a));
}

EnumerationDomain enumeration_domain(const AdmissiblePolynomial& f, u64 N) {
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be positive");
  const i128 a = f.a(), b = f.b(), c = f.c(), n = static_cast<i128>(N);
  EnumerationDomain dom;
  if (a > 0) {
    auto at_most_n = convex_sublevel(a, b, c - n);
    auto negative = convex_sublevel(a, b, c + 1);
    dom.intervals = subtract(at_most_n, negative);
  } else {
    auto non_negative = convex_sublevel(-a, -b, -c);
    auto above_n = convex_sublevel(-a, -b, -c + n + 1);
    dom.intervals = subtract(non_negative, above_n);
  }
  for (const auto& r : dom.intervals) dom.cardinality_a += r.size();
  dom.x_length = interval_length(f, N);
  return dom;
}

RootSet roots_mod_prime(const AdmissiblePolynomial& f, u64 p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  RootSet out{p, {}};
  const u64 am = mod_floor(f.a(), p), bm = mod_floor(f.b(), p), cm = mod_floor(f.c(), p);
  if (p == 2) {
    for (u64 r = 0; r < 2; ++r) {
      if (f.eval_mod(static_cast<i64>(r), 2) == 0) out.roots.push_back(r);
    }
    return out;
  }
  if (am == 0) {
    if (bm != 0) {
      u64 inv = *inverse_mod(bm, p);
      out.roots.push_back(mulmod((p - cm) % p, inv, p));
    } else if (cm == 0) {
      for (u64 r = 0; r < p; ++r) out.roots.push_back(r);
    }
    return out;
  }
  auto s = sqrt_mod_prime(mod_floor(f.delta(), p), p);
  if (!s) return out;
  const u64 inv2a = *inverse_mod(mulmod(2, am, p), p);
  const u64 minus_b = (p - bm) % p;
  u64 r1 = mulmod((minus_b + *s) % p, inv2a, p);
  u64 r2 = mulmod((minus_b + p - *s) % p, inv2a, p);
  out.roots.push_back(r1);
  if (r2 != r1) out.roots.push_back(r2);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

RootSet roots_mod_prime_power(const AdmissiblePolynomial& f, u64 p, int k) {
  RootSet cur = roots_mod_prime(f, p);
  for (int j = 1; j < k; ++j) {
    const u64 pj = cur.modulus;
    u128 wide = static_cast<u128>(pj) * p;
    if (wide > kMaxFactorizable) throw Error(Errc::FactorizationOverflow, "prime power too large");
    const u64 next_mod = static_cast<u64>(wide);
    RootSet next{next_mod, {}};
    for (u64 r : cur.roots) {
      const u64 deriv = (mulmod(mulmod(2, mod_floor(f.a(), p), p), r % p, p) + mod_floor(f.b(), p)) % p;
      if (deriv != 0) {
        // f(r + t p^j) = f(r) + t p^j f'(r)  (mod p^{j+1})
        const u64 fr = f.eval_mod(static_cast<i64>(r), next_mod);
        const u64 quotient = (fr / pj) % p;
        const u64 t = mulmod((p - quotient) % p, *inverse_mod(deriv, p), p);
        next.roots.push_back(r + t * pj);
      } else {
        for (u64 t = 0; t < p; ++t) {
          const u64 cand = r + t * pj;
          if (f.eval_mod(static_cast<i64>(cand), next_mod) == 0) next.roots.push_back(cand);
        }
      }
    }
    std::sort(next.roots.begin(), next.roots.end());
    cur = std::move(next);
  }
  return cur;
}

RootSet roots_mod(const AdmissiblePolynomial& f, u64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  RootSet acc{1, {0}};
  for (const auto& [p, e] : factorize(d)) {
    RootSet part = roots_mod_prime_power(f, p, e);
    if (part.roots.empty()) return RootSet{d, {}};
    const u64 m = acc.modulus, q = part.modulus;
    const u64 m_inv = *inverse_mod(m % q, q);
    RootSet merged{m * q, {}};
    merged.roots.reserve(acc.size() * part.size());
    for (u64 x : acc.roots) {
      for (u64 y : part.roots) {
        // z = x + m * ((y - x) * m^{-1} mod q)
        const u64 diff = mod_floor(static_cast<i128>(y) - static_cast<i128>(x % q), q);
        merged.roots.push_back(x + m * mulmod(diff, m_inv, q));
      }
    }
    acc = std::move(merged);
  }
  std::sort(acc.roots.begin(), acc.roots.end());
  acc.modulus = d;
  return acc;
}

u64 rho(const AdmissiblePolynomial& f, u64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  u64 count = 1;
  for (const auto& [p, e] : factorize(d)) {
    count *= roots_mod_prime_power(f, p, e).size();
    if (count == 0) break;
  }
  return count;
}

u64 rho_by_enumeration(const AdmissiblePolynomial& f, u64 d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  u64 count = 0;
  for (u64 r = 0; r < d; ++r) {
    if (f.eval_mod(static_cast<i64>(r), d) == 0) ++count;
  }
  return count;
}

}  // namespace quadprimes
