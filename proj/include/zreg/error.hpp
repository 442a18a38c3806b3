#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zreg {

enum class ErrorCode {
  ZeroConstantTerm,
  NonzeroInnerConstant,
  PoleAtNonpositiveInteger,
  PoleAtOne,
  DivergentArgument,
  ConvergenceCap,
  InvalidOrder,
  OutOfDisk,
  NonpositiveConstant,
  EmptySpec,
  MalformedSpec,
  NotPolynomial,
  TruncationTooLow,
  UnsupportedOrder,
  HankelConditionsFailed,
  QuadratureFailure,
  OutOfRegularizationRegion,
  RouteDisagreement,
  RadiusTooLarge,
};

std::string_view to_string(ErrorCode code);

// Errors whose cause is the input description rather than the mathematics.
bool is_spec_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zreg
