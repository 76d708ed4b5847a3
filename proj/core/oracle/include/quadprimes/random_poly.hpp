#pragma once

#include <optional>
#include <random>

#include "quadprimes/error.hpp"
#include "quadprimes/polynomial.hpp"

namespace quadprimes::oracle {

/// Draws admissible polynomials with |a|, |b|, |c| <= bound by rejection.
class PolyGenerator {
 public:
  explicit PolyGenerator(u64 seed, i64 bound = 50) : rng_(seed), coeff_(-bound, bound) {}

  AdmissiblePolynomial next() {
    for (;;) {
      try {
        return validate(coeff_(rng_), coeff_(rng_), coeff_(rng_));
      } catch (const Error&) {
      }
    }
  }

  /// Like next() but insists on a non-empty domain for N.
  AdmissiblePolynomial next_with_domain(u64 N) {
    for (;;) {
      auto f = next();
      if (enumeration_domain(f, N).cardinality_a > 0) return f;
    }
  }

  u64 uniform(u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<i64> coeff_;
};

}  // namespace quadprimes::oracle
