#pragma once

#include <optional>
#include <vector>

#include "quadprimes/arith.hpp"
#include "quadprimes/polynomial.hpp"

namespace quadprimes {

/// Kronecker symbol (delta / n). Throws Errc::UndefinedSymbol for (0, 0).
int kronecker(i64 delta, i64 n);

/// lambda(n) = sum_{d | n} chi_delta(d), multiplicative in n.
/// Throws Errc::FactorizationOverflow for n beyond the factorization range.
u64 lambda(i64 delta, u64 n);

/// True when delta = 0 or 1 (mod 4) and delta is not a perfect square.
bool is_discriminant(i64 delta);

/// Fundamental discriminant test (d = 1 mod 4 squarefree, or d = 4m with
/// m = 2, 3 mod 4 squarefree). Squares are excluded.
bool is_fundamental(i64 delta);

/// Default hard cap on the number of L-series terms.
inline constexpr u64 kDefaultLSeriesCap = 1'000'000'000ULL;

struct LValue {
  double value = 0.0;
  double error_bound = 0.0;  // rigorous bound on |value - L(1, chi_delta)|
  u64 cutoff = 0;            // number of summed terms M
};

/// sup_x |sum_{n <= x} chi_delta(n)| as used for the series tail:
/// min(sqrt|delta| log|delta|, |delta|/2).
double character_sum_bound(i64 delta);

/// L(1, chi_delta) as the partial sum up to M, with M the smallest cutoff
/// whose partial-summation tail bound 2C/(M+1) is within `tolerance`.
/// The returned bound also covers floating-point accumulation error.
/// Throws Errc::NotADiscriminant, Errc::ToleranceUnreachable (M > cap) or
/// Errc::InvalidArgument for a non-positive tolerance.
LValue l_one(i64 delta, double tolerance, u64 cutoff_cap = kDefaultLSeriesCap);

/// h(delta) by counting reduced primitive forms (a, b, c) of discriminant delta.
u64 class_number(i64 delta);

/// 2 pi h / (w sqrt|delta|) for a fundamental delta in (-10^6, 0).
/// Throws Errc::NotFundamental or Errc::RangeExceeded.
double l_one_class_number_oracle(i64 delta);

/// Kronecker character chi_delta with its L(1) value computed once at
/// construction. Immutable afterwards.
class CharacterContext {
 public:
  CharacterContext(i64 delta, double tolerance, u64 cutoff_cap = kDefaultLSeriesCap);

  i64 delta() const noexcept { return delta_; }
  int operator()(i64 n) const { return kronecker(delta_, n); }
  double l_one_value() const noexcept { return l_.value; }
  double l_one_error_bound() const noexcept { return l_.error_bound; }
  const LValue& l_one() const noexcept { return l_; }

 private:
  i64 delta_;
  LValue l_;
};

/// A real number carried with a symmetric uncertainty radius.
struct Interval {
  double value = 0.0;
  double radius = 0.0;
};

struct ExceptionalityMetrics {
  Interval beta;            // -log(L(1) log|delta|)
  Interval l_cap;           // -log(L(1) log A)
  double b_cap = 0.0;       // 3 log|delta| / log A
  double g_delta = 0.0;     // lower admissible N; +inf when undefined
  bool hypotheses_hold = false;
  std::optional<double> s_diagnostic;  // sqrt(beta / B) / 2, only for beta > 0
};

/// Closed-form exceptionality quantities for (f, N) with cardinality A.
/// Throws Errc::DegenerateA when A < 3 and Errc::InvalidArgument when
/// l_one <= 0.
ExceptionalityMetrics metrics(const AdmissiblePolynomial& f, u64 N, u64 A, double l_one,
                              double l_one_error = 0.0);

}  // namespace quadprimes
