#pragma once

// Word-size modular arithmetic, primality and factorization helpers shared by
// every module. All routines are pure.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace quadprimes {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Largest integer accepted by `factorize` (trial division stays < 10^7 steps).
inline constexpr u64 kMaxFactorizable = 100'000'000'000'000ULL;  // 1e14

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Least non-negative residue of `a` modulo `m` (m > 0).
inline u64 mod_floor(i128 a, u64 m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += static_cast<i128>(m);
  return static_cast<u64>(r);
}

/// Floor division for a signed dividend and positive divisor.
inline i64 floor_div(i64 a, i64 m) {
  i64 q = a / m;
  if ((a % m != 0) && (a < 0)) --q;
  return q;
}

/// Inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<u64> inverse_mod(u64 a, u64 m);

u64 gcd(u64 a, u64 b);

u64 isqrt(u64 n);
u128 isqrt(u128 n);

bool is_perfect_square(i64 n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

/// Square root of `a` modulo an odd prime `p` (Tonelli-Shanks), or nullopt if
/// `a` is a non-residue. For a = 0 returns 0.
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);

/// Legendre symbol (a/p) for odd prime p.
int legendre(u64 a, u64 p);

/// Prime factorization by trial division, ascending primes. Throws
/// Errc::FactorizationOverflow above kMaxFactorizable; n = 1 gives {}.
std::vector<std::pair<u64, int>> factorize(u64 n);

bool is_squarefree(u64 n);

/// All primes p <= limit, ascending.
std::vector<u32> primes_up_to(u64 limit);

/// Checked signed arithmetic; throws Errc::Overflow instead of wrapping.
i128 checked_mul(i128 a, i128 b);
i128 checked_add(i128 a, i128 b);
i64 narrow_i64(i128 v);

}  // namespace quadprimes
