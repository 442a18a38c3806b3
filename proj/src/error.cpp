#include "zreg/error.hpp"

namespace zreg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::DivergentArgument: return "DivergentArgument";
    case ErrorCode::ConvergenceCap: return "ConvergenceCap";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::OutOfDisk: return "OutOfDisk";
    case ErrorCode::NonpositiveConstant: return "NonpositiveConstant";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::TruncationTooLow: return "TruncationTooLow";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::HankelConditionsFailed: return "HankelConditionsFailed";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::OutOfRegularizationRegion: return "OutOfRegularizationRegion";
    case ErrorCode::RouteDisagreement: return "RouteDisagreement";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
  }
  return "Unknown";
}

bool is_spec_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonpositiveConstant:
    case ErrorCode::EmptySpec:
    case ErrorCode::MalformedSpec:
    case ErrorCode::NotPolynomial:
      return true;
    default:
      return false;
  }
}

}  // namespace zreg
