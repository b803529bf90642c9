#include "selfenergy/error.hpp"

namespace selfenergy {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::UnsupportedModel: return "UnsupportedModel";
  case ErrorKind::PoleAtFrequency: return "PoleAtFrequency";
  case ErrorKind::SingularPoint: return "SingularPoint";
  case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
  case ErrorKind::SingularDenominator: return "SingularDenominator";
  case ErrorKind::EvanescentBranchError: return "EvanescentBranchError";
  case ErrorKind::IllDefinedModel: return "IllDefinedModel";
  case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
  case ErrorKind::NonVanishingImaginaryPart: return "NonVanishingImaginaryPart";
  case ErrorKind::NotEvanescent: return "NotEvanescent";
  case ErrorKind::OscillatoryDivergence: return "OscillatoryDivergence";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace selfenergy
