#include "quadprimes/character.hpp"

#include <bit>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "compensated_sum.hpp"
#include "quadprimes/error.hpp"

namespace quadprimes {

namespace {

// Jacobi symbol (a/n) for odd n > 0, 0 <= a < n.
int jacobi(u64 a, u64 n) {
  int t = 1;
  while (a != 0) {
    int v = std::countr_zero(a);
    a >>= v;
    if ((v & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

u64 magnitude(i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); }

constexpr u64 kTableLimit = 1ULL << 24;
constexpr u64 kBlock = 256;

}  // namespace

int kronecker(i64 delta, i64 n) {
  if (n == 0) {
    if (delta == 0) throw Error(Errc::UndefinedSymbol, "(0/0)");
    return (delta == 1 || delta == -1) ? 1 : 0;
  }
  int sign = 1;
  if (n < 0 && delta < 0) sign = -1;
  u64 m = magnitude(n);
  if ((m & 1) == 0) {
    if ((delta & 1) == 0) return 0;
    int v = std::countr_zero(m);
    m >>= v;
    if (v & 1) {
      u64 r = mod_floor(delta, 8);
      if (r == 3 || r == 5) sign = -sign;
    }
  }
  if (m == 1) return sign;
  return sign * jacobi(mod_floor(delta, m), m);
}

u64 lambda(i64 delta, u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "lambda(0)");
  u64 result = 1;
  for (const auto& [p, e] : factorize(n)) {
    switch (kronecker(delta, static_cast<i64>(p))) {
      case 1: result *= static_cast<u64>(e + 1); break;
      case 0: break;
      default:
        if (e % 2 == 1) return 0;
    }
  }
  return result;
}

bool is_discriminant(i64 delta) {
  u64 r = mod_floor(delta, 4);
  return (r == 0 || r == 1) && !is_perfect_square(delta);
}

bool is_fundamental(i64 delta) {
  if (!is_discriminant(delta)) return false;
  if (mod_floor(delta, 4) == 1) return is_squarefree(magnitude(delta));
  i64 m = delta / 4;
  u64 r = mod_floor(m, 4);
  return (r == 2 || r == 3) && is_squarefree(magnitude(m));
}

double character_sum_bound(i64 delta) {
  const double q = static_cast<double>(magnitude(delta));
  return std::min(std::sqrt(q) * std::log(q), q / 2.0);
}

LValue l_one(i64 delta, double tolerance, u64 cutoff_cap) {
  if (!is_discriminant(delta)) {
    throw Error(Errc::NotADiscriminant, std::to_string(delta));
  }
  if (!(tolerance > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");

  const double c = character_sum_bound(delta);
  // tail <= 2C/(M+1) <= tolerance
  const double needed = std::ceil(2.0 * c / tolerance) - 1.0;
  if (needed > static_cast<double>(cutoff_cap)) {
    throw Error(Errc::ToleranceUnreachable,
                "needs " + std::to_string(needed) + " terms, cap " + std::to_string(cutoff_cap));
  }
  const u64 cutoff = std::max<u64>(1, static_cast<u64>(needed));
  const u64 q = magnitude(delta);

  detail::CompensatedSum total;
  double block = 0.0;
  u64 in_block = 0;
  auto push = [&](int chi, u64 n) {
    if (chi != 0) block += chi / static_cast<double>(n);
    if (++in_block == kBlock) {
      total.add(block);
      block = 0.0;
      in_block = 0;
    }
  };

  if (q <= kTableLimit) {
    std::vector<signed char> table(q);
    for (u64 r = 0; r < q; ++r) table[r] = static_cast<signed char>(kronecker(delta, static_cast<i64>(r)));
    u64 r = 1 % q;
    for (u64 n = 1; n <= cutoff; ++n) {
      push(table[r], n);
      if (++r == q) r = 0;
    }
  } else {
    for (u64 n = 1; n <= cutoff; ++n) push(kronecker(delta, static_cast<i64>(n)), n);
  }
  total.add(block);

  LValue out;
  out.cutoff = cutoff;
  out.value = static_cast<double>(total.value());
  const double tail = 2.0 * c / (static_cast<double>(cutoff) + 1.0);
  // per-block double rounding, compensated outer sum, final narrowing
  const double harmonic = std::log(static_cast<double>(cutoff)) + 1.0;
  const double rounding = (kBlock + 2) * DBL_EPSILON * harmonic + DBL_EPSILON * std::fabs(out.value);
  out.error_bound = tail + rounding;
  return out;
}

u64 class_number(i64 delta) {
  if (delta >= 0 || !is_discriminant(delta)) throw Error(Errc::NotADiscriminant, std::to_string(delta));
  const i64 d = -delta;
  u64 h = 0;
  for (i64 a = 1; 3 * a * a <= d; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      if (((b - delta) & 1) != 0) continue;  // b = delta (mod 2)
      const i64 num = b * b + d;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd(gcd(magnitude(a), magnitude(b)), magnitude(c)) != 1) continue;
      ++h;
    }
  }
  return h;
}

double l_one_class_number_oracle(i64 delta) {
  if (delta >= 0 || delta <= -1'000'000) throw Error(Errc::RangeExceeded, std::to_string(delta));
  if (!is_fundamental(delta)) throw Error(Errc::NotFundamental, std::to_string(delta));
  const double w = delta == -3 ? 6.0 : delta == -4 ? 4.0 : 2.0;
  const double h = static_cast<double>(class_number(delta));
  return 2.0 * std::numbers::pi * h / (w * std::sqrt(static_cast<double>(-delta)));
}

CharacterContext::CharacterContext(i64 delta, double tolerance, u64 cutoff_cap)
    : delta_(delta), l_(quadprimes::l_one(delta, tolerance, cutoff_cap)) {}

ExceptionalityMetrics metrics(const AdmissiblePolynomial& f, u64 N, u64 A, double l_one_value,
                              double l_one_error) {
  if (A < 3) throw Error(Errc::DegenerateA, "A = " + std::to_string(A));
  if (!(l_one_value > 0.0)) throw Error(Errc::InvalidArgument, "L(1) must be positive");

  const long double log_delta = std::log(static_cast<long double>(magnitude(f.delta())));
  const long double log_a = std::log(static_cast<long double>(A));
  const long double l = l_one_value, e = std::fabs(l_one_error);
  constexpr long double inf = std::numeric_limits<long double>::infinity();

  // -log(x * scale) at the interval ends of x = l +- e
  auto propagated = [&](long double scale) {
    Interval out;
    const long double mid = -std::log(l * scale);
    const long double upper = (l - e > 0) ? -std::log((l - e) * scale) : inf;
    const long double lower = -std::log((l + e) * scale);
    out.value = static_cast<double>(mid);
    out.radius = static_cast<double>(std::max(upper - mid, mid - lower));
    return out;
  };

  ExceptionalityMetrics m;
  m.beta = propagated(log_delta);
  m.l_cap = propagated(log_a);
  m.b_cap = static_cast<double>(3.0L * log_delta / log_a);

  const long double beta = m.beta.value;
  const long double abs_delta = static_cast<long double>(magnitude(f.delta()));
  const long double abs_a = static_cast<long double>(magnitude(f.a()));
  if (f.delta() > 0) {
    m.g_delta = static_cast<double>(abs_delta * std::exp(-beta / 2));
  } else {
    const long double denom = 4 * abs_a - std::exp(-beta / 2);
    m.g_delta = denom > 0 ? static_cast<double>(abs_delta / denom) : std::numeric_limits<double>::infinity();
  }

  const long double n = static_cast<long double>(N);
  const long double upper_n = abs_a * std::pow(abs_delta, beta / 2);
  m.hypotheses_hold = abs_a >= 1 && abs_a <= std::exp(beta / 5) && static_cast<long double>(m.g_delta) <= n &&
                      n <= upper_n;
  if (beta > 0) m.s_diagnostic = static_cast<double>(0.5L * std::sqrt(beta / static_cast<long double>(m.b_cap)));
  return m;
}

}  // namespace quadprimes
