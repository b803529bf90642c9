#pragma once

#include <vector>

namespace selfenergy::analysis {

enum class Abscissa { Chi0, OmegaPZ };

struct RatioSample {
  double x;
  double ratio_par;
  double ratio_perp;
};

struct RatioCurve {
  Abscissa abscissa = Abscissa::Chi0;
  /// omega_T d of a Lorentz curve; 0 for the plasma curve.
  double omega_t_d = 0.0;
  std::vector<RatioSample> samples;
};

/// Lorentz perpendicular ratio to the perfect mirror, r(chi0) for fixed
/// a = (omega_T d)^2.
double lorentz_ratio_perp(double chi0, double omega_t_d);
double lorentz_ratio_par(double chi0, double omega_t_d);

RatioCurve ratio_curve_chi0(double omega_t_d, const std::vector<double> &chi0);

/// Plasma curve (first) followed by one Lorentz curve per omega_T d, all on
/// the omega_p d grid.
std::vector<RatioCurve> ratio_curve_omega_p(const std::vector<double> &omega_p_d,
                                            const std::vector<double> &omega_t_d,
                                            double tol = 1e-10);

struct PeakReport {
  bool exists = false;
  double chi0_star = 0.0;
  double height = 0.0;
};

/// Golden-section maximization of r_perp over log chi0 in (1e-6, 1e6).
PeakReport find_peak(double omega_t_d, double tol = 1e-12);

/// Largest omega_T d with a peak, by bisection on find_peak().exists.
double critical_threshold(double tol = 1e-4);

struct NonDispLimitRow {
  double n;
  double ratio_par;
  double ratio_perp;
};
struct LorentzToPlasmaRow {
  double omega_t_d;
  double lorentz_g_perp;
  double plasma_g_perp;
  double rel_gap;
};
struct PlasmaSmallRow {
  double omega_p_d;
  double d_par;
  double d_perp;
};

/// Tabulated demonstrations that the model limits do not commute with the
/// residue evaluation. Distances are d = 1.
struct LimitReport {
  std::vector<NonDispLimitRow> nondisp_to_mirror;
  std::vector<LorentzToPlasmaRow> lorentz_to_plasma;
  std::vector<PlasmaSmallRow> plasma_to_vacuum;
};
LimitReport limit_noncommutation_report();

} // namespace selfenergy::analysis
