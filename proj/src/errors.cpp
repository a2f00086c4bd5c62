#include "sumcolour/errors.hpp"

namespace sumcolour {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPositiveInput: return "NonPositiveInput";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FixedPointFound: return "FixedPointFound";
    case Errc::NotInP1: return "NotInP1";
    case Errc::PInDividesK: return "PInDividesK";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BadOrder: return "BadOrder";
    case Errc::BandMismatch: return "BandMismatch";
    case Errc::NoWitness: return "NoWitness";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ChainNotIncreasing: return "ChainNotIncreasing";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooSmallIndexSpace: return "TooSmallIndexSpace";
    case Errc::NotEnoughPredecessors: return "NotEnoughPredecessors";
    case Errc::NoCylinder: return "NoCylinder";
    case Errc::SumEscapedZ: return "SumEscapedZ";
    case Errc::EmptyB: return "EmptyB";
    case Errc::ZeroMeasure: return "ZeroMeasure";
    case Errc::UnknownColouring: return "UnknownColouring";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MalformedCert: return "MalformedCert";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace sumcolour
