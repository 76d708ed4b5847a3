#include "quadprimes/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "quadprimes/error.hpp"

namespace quadprimes {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<u64> inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 isqrt(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  // Newton correction; the long double estimate is within a few ulps.
  for (int i = 0; i < 4 && r > 0; ++i) r = (r + n / r) / 2;
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(i64 n) {
  if (n < 0) return false;
  u64 r = isqrt(static_cast<u64>(n));
  return r * r == static_cast<u64>(n);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  // p - 1 = q * 2^s with q odd
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre(z, p) != -1) ++z;

  u64 c = powmod(z, q, p);
  u64 x = powmod(a, (q + 1) / 2, p);
  u64 t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "factorize(0)");
  if (n > kMaxFactorizable) {
    throw Error(Errc::FactorizationOverflow, std::to_string(n) + " exceeds the trial-division range");
  }
  std::vector<std::pair<u64, int>> out;
  auto take = [&](u64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (u64 p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(u64 n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<u32> primes_up_to(u64 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  if (limit > std::numeric_limits<u32>::max()) {
    throw Error(Errc::BudgetExceeded, "prime table limit " + std::to_string(limit));
  }
  // odd-only table: index i represents 2i+1
  std::vector<bool> composite(limit / 2 + 1, false);
  primes.push_back(2);
  for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    u64 p = 2 * i + 1;
    primes.push_back(static_cast<u32>(p));
    for (u64 j = p * p; j <= limit; j += 2 * p) composite[j / 2] = true;
  }
  return primes;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit multiplication");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit addition");
  return r;
}

i64 narrow_i64(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw Error(Errc::Overflow, "value exceeds 64-bit range");
  }
  return static_cast<i64>(v);
}

}  // namespace quadprimes
