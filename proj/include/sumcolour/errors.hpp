#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumcolour {

enum class Errc {
  InvalidArgument,
  NonPositiveInput,
  ZeroScale,
  NotPrime,
  FixedPointFound,
  NotInP1,
  PInDividesK,
  NotCoprime,
  BadOrder,
  BandMismatch,
  NoWitness,
  ZeroInput,
  ZeroVector,
  ChainNotIncreasing,
  IndexOutOfRange,
  PreconditionViolated,
  TooSmallIndexSpace,
  NotEnoughPredecessors,
  NoCylinder,
  SumEscapedZ,
  EmptyB,
  ZeroMeasure,
  UnknownColouring,
  BudgetExceeded,
  MalformedCert,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `code()` identifies the condition,
/// `what()` is "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace sumcolour
