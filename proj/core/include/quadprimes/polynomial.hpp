#pragma once

#include <cstddef>
#include <vector>

#include "quadprimes/arith.hpp"

namespace quadprimes {

/// A quadratic f(x) = a x^2 + b x + c that passes the local admissibility
/// conditions: a != 0, gcd(a,b,c) = 1, a+b or c odd, and b^2 - 4ac not a
/// perfect square. Only `validate` constructs one.
class AdmissiblePolynomial {
 public:
  i64 a() const noexcept { return a_; }
  i64 b() const noexcept { return b_; }
  i64 c() const noexcept { return c_; }
  i64 delta() const noexcept { return delta_; }

  /// Exact value f(n). Throws Errc::Overflow if it leaves the 128-bit range.
  i128 operator()(i64 n) const;

  /// f(n) mod m in [0, m).
  u64 eval_mod(i64 n, u64 m) const;

  friend bool operator==(const AdmissiblePolynomial&, const AdmissiblePolynomial&) = default;

 private:
  friend AdmissiblePolynomial validate(i64 a, i64 b, i64 c);
  AdmissiblePolynomial(i64 a, i64 b, i64 c, i64 delta) : a_(a), b_(b), c_(c), delta_(delta) {}

  i64 a_, b_, c_, delta_;
};

/// Checks the conditions in order (leading coefficient, common factor,
/// parity, square discriminant) and throws Error with the first failure.
AdmissiblePolynomial validate(i64 a, i64 b, i64 c);

struct IntRange {
  i64 lo;
  i64 hi;  // inclusive

  u64 size() const noexcept { return hi < lo ? 0 : static_cast<u64>(hi - lo) + 1; }
  bool contains(i64 n) const noexcept { return lo <= n && n <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// The integers n with 0 <= f(n) <= N, as at most two disjoint ascending
/// ranges. `x_length` is the real length of the solution set from the closed
/// form for each sign case (0 where the set is empty), and `cardinality_a`
/// counts integers n, so a value hit twice counts twice.
struct EnumerationDomain {
  std::vector<IntRange> intervals;
  double x_length = 0.0;
  u64 cardinality_a = 0;
};

EnumerationDomain enumeration_domain(const AdmissiblePolynomial& f, u64 N);

/// The closed-form real length of {x : 0 <= f(x) <= N}.
double interval_length(const AdmissiblePolynomial& f, u64 N);

struct RootSet {
  u64 modulus = 1;
  std::vector<u64> roots;  // ascending residues in [0, modulus)

  std::size_t size() const noexcept { return roots.size(); }
};

/// Roots of f modulo a prime. Throws Errc::NotPrime.
RootSet roots_mod_prime(const AdmissiblePolynomial& f, u64 p);

/// Roots modulo p^k by lifting the roots mod p: Hensel for simple roots,
/// exhaustive over the p candidates for singular ones.
RootSet roots_mod_prime_power(const AdmissiblePolynomial& f, u64 p, int k);

/// All roots modulo a general d >= 1, assembled by CRT over prime powers.
RootSet roots_mod(const AdmissiblePolynomial& f, u64 d);

/// rho(d) = #{n mod d : f(n) = 0 mod d}, multiplicatively over prime powers.
u64 rho(const AdmissiblePolynomial& f, u64 d);

/// Reference path for rho that scans every residue; only sensible for small d.
u64 rho_by_enumeration(const AdmissiblePolynomial& f, u64 d);

}  // namespace quadprimes
