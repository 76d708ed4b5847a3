#include "quadprimes/error.hpp"

namespace quadprimes {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::CommonFactor: return "CommonFactor";
    case Errc::ParityObstruction: return "ParityObstruction";
    case Errc::SquareDiscriminant: return "SquareDiscriminant";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FactorizationOverflow: return "FactorizationOverflow";
    case Errc::Overflow: return "Overflow";
    case Errc::UndefinedSymbol: return "UndefinedSymbol";
    case Errc::ToleranceUnreachable: return "ToleranceUnreachable";
    case Errc::NotADiscriminant: return "NotADiscriminant";
    case Errc::NotFundamental: return "NotFundamental";
    case Errc::RangeExceeded: return "RangeExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ResolutionExceeded: return "ResolutionExceeded";
    case Errc::DegenerateA: return "DegenerateA";
    case Errc::DegenerateMainTerm: return "DegenerateMainTerm";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SpecParseError: return "SpecParseError";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroLeadingCoefficient:
    case Errc::CommonFactor:
    case Errc::ParityObstruction:
    case Errc::SquareDiscriminant:
    case Errc::NotPrime:
    case Errc::UndefinedSymbol:
    case Errc::NotADiscriminant:
    case Errc::NotFundamental:
    case Errc::DegenerateA:
    case Errc::InvalidArgument:
    case Errc::SpecParseError:
    case Errc::ResolutionExceeded:
      return true;
    default:
      return false;
  }
}

bool is_budget_error(Errc code) noexcept {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::ToleranceUnreachable:
    case Errc::FactorizationOverflow:
    case Errc::Overflow:
    case Errc::RangeExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace quadprimes
