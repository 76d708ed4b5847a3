#pragma once

#include <cmath>

namespace quadprimes::detail {

// Neumaier-compensated accumulator in extended precision.
struct CompensatedSum {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + comp; }
};

}  // namespace quadprimes::detail
