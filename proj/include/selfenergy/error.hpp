#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace selfenergy {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedModel,
  PoleAtFrequency,
  SingularPoint,
  BranchAmbiguity,
  SingularDenominator,
  EvanescentBranchError,
  IllDefinedModel,
  ToleranceNotMet,
  NonVanishingImaginaryPart,
  NotEvanescent,
  OscillatoryDivergence,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        m_kind(kind) {}

  Error(ErrorKind kind, const std::string &what, std::complex<double> payload)
      : Error(kind, what) {
    m_payload = payload;
  }

  ErrorKind kind() const noexcept { return m_kind; }

  /// For SingularPoint: the cleared value eps*(k_z^2+k_par^2) at the pole,
  /// which stays finite and lets the caller switch to the cleared form.
  std::optional<std::complex<double>> payload() const noexcept {
    return m_payload;
  }

private:
  ErrorKind m_kind;
  std::optional<std::complex<double>> m_payload;
};

} // namespace selfenergy
