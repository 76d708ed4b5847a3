#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadprimes {

enum class Errc {
  // polynomial admissibility
  ZeroLeadingCoefficient,
  CommonFactor,
  ParityObstruction,
  SquareDiscriminant,
  // arithmetic
  NotPrime,
  FactorizationOverflow,
  Overflow,
  // character / L-function
  UndefinedSymbol,
  ToleranceUnreachable,
  NotADiscriminant,
  NotFundamental,
  RangeExceeded,
  // sieve / analytic
  BudgetExceeded,
  ResolutionExceeded,
  DegenerateA,
  DegenerateMainTerm,
  InvalidArgument,
  // cli
  SpecParseError,
};

std::string_view to_string(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failure; `what()` carries the code name followed by detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(detail) {}
  explicit Error(Errc code) : Error(code, "") {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

/// True for the validation family (bad polynomial or malformed input).
bool is_validation_error(Errc code) noexcept;

/// True for the resource family (budgets, cutoffs, overflow of a configured range).
bool is_budget_error(Errc code) noexcept;

}  // namespace quadprimes
