#pragma once

// Acceptance criteria runner shared by the `validate` subcommand and the
// acceptance test binary.

#include <string>
#include <vector>

namespace selfenergy::validation {

enum class Status { Pass, Mismatch, ToleranceNotMet, Error };
std::string to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Pass;
  /// Largest measured deviation, in the criterion's own metric.
  double deviation = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct Options {
  /// Quadrature tolerance for criteria 1, 2, 9; others use their own.
  double quad_tol = 1e-10;
  double mode_sum_tol = 1e-4;
};

CriterionResult criterion_closed_form_equivalence(const Options &o);
CriterionResult criterion_plasma_paths(const Options &o);
CriterionResult criterion_factor_of_two(const Options &o);
CriterionResult criterion_plasma_to_mirror(const Options &o);
CriterionResult criterion_peak_structure(const Options &o);
CriterionResult criterion_lorentz_identity(const Options &o);
CriterionResult criterion_mode_sum(const Options &o);
CriterionResult criterion_damped_drude(const Options &o);
CriterionResult criterion_figure_data(const Options &o);
CriterionResult criterion_derivatives(const Options &o);

std::vector<CriterionResult> run_all(const Options &o);

/// "[PASS] 3 factor-of-two limit: deviation=... threshold=... (0.01 s)"
std::string format_line(const CriterionResult &r);

} // namespace selfenergy::validation
