#include "selfenergy/analysis.hpp"
#include "selfenergy/error.hpp"
#include "selfenergy/shift_engine.hpp"

#include <cmath>

namespace selfenergy::analysis {

namespace {

const Geometry unit_distance{1.0};

void require_increasing(const std::vector<double> &grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw Error(ErrorKind::InvalidArgument,
                  "abscissa grid must be positive and strictly increasing");
  }
}

} // namespace

double lorentz_ratio_perp(double chi0, double omega_t_d) {
  return lorentz_perp_chi(chi0, omega_t_d, unit_distance) /
         pm_closed(unit_distance).g_perp;
}

double lorentz_ratio_par(double chi0, double omega_t_d) {
  const double omega_p_d = std::sqrt(chi0) * omega_t_d;
  return lorentz_closed(omega_p_d, omega_t_d, unit_distance).g_par /
         pm_closed(unit_distance).g_par;
}

RatioCurve ratio_curve_chi0(double omega_t_d, const std::vector<double> &chi0) {
  if (!(omega_t_d > 0.0))
    throw Error(ErrorKind::InvalidArgument, "omega_T d must be positive");
  require_increasing(chi0);
  RatioCurve curve{Abscissa::Chi0, omega_t_d, {}};
  curve.samples.reserve(chi0.size());
  for (double x : chi0)
    curve.samples.push_back(
        {x, lorentz_ratio_par(x, omega_t_d), lorentz_ratio_perp(x, omega_t_d)});
  return curve;
}

std::vector<RatioCurve> ratio_curve_omega_p(const std::vector<double> &omega_p_d,
                                            const std::vector<double> &omega_t_d,
                                            double tol) {
  require_increasing(omega_p_d);
  std::vector<RatioCurve> curves;
  const GeometryFactors pm = pm_closed(unit_distance);

  RatioCurve plasma{Abscissa::OmegaPZ, 0.0, {}};
  for (double x : omega_p_d) {
    const GeometryFactors g = plasma_factors(x, unit_distance, tol).g;
    plasma.samples.push_back({x, g.g_par / pm.g_par, g.g_perp / pm.g_perp});
  }
  curves.push_back(std::move(plasma));

  for (double wt : omega_t_d) {
    RatioCurve lorentz{Abscissa::OmegaPZ, wt, {}};
    for (double x : omega_p_d) {
      const GeometryFactors g = lorentz_closed(x, wt, unit_distance);
      lorentz.samples.push_back({x, g.g_par / pm.g_par, g.g_perp / pm.g_perp});
    }
    curves.push_back(std::move(lorentz));
  }
  return curves;
}

PeakReport find_peak(double omega_t_d, double tol) {
  if (!(omega_t_d > 0.0))
    throw Error(ErrorKind::InvalidArgument, "omega_T d must be positive");
  const auto r = [omega_t_d](double t) {
    return lorentz_ratio_perp(std::exp(t), omega_t_d);
  };

  const double lo_edge = std::log(1e-6), hi_edge = std::log(1e6);
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = lo_edge, hi = hi_edge;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = r(x1), f2 = r(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = r(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = r(x1);
    }
  }
  const double t_star = 0.5 * (lo + hi);
  const double height = r(t_star);

  // A maximum pinned to the upper edge means r is still rising: no peak.
  PeakReport out;
  out.exists = (hi_edge - t_star) > 1e-3 && height > r(hi_edge);
  if (out.exists) {
    out.chi0_star = std::exp(t_star);
    out.height = height;
  }
  return out;
}

double critical_threshold(double tol) {
  double lo = 0.05, hi = 1.0;
  while (hi - lo > 0.25 * tol) {
    const double mid = 0.5 * (lo + hi);
    (find_peak(mid).exists ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LimitReport limit_noncommutation_report() {
  LimitReport rep;
  const GeometryFactors pm = pm_closed(unit_distance);

  for (double n : {10.0, 1e2, 1e3, 1e4}) {
    const GeometryFactors g = nondisp_closed(n, unit_distance);
    rep.nondisp_to_mirror.push_back({n, g.g_par / pm.g_par, g.g_perp / pm.g_perp});
  }

  const double omega_p = 1.0;
  const double plasma_perp = plasma_factors(omega_p, unit_distance).g.g_perp;
  for (double wt : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double lorentz_perp = lorentz_closed(omega_p, wt, unit_distance).g_perp;
    rep.lorentz_to_plasma.push_back(
        {wt, lorentz_perp, plasma_perp,
         std::abs(lorentz_perp - plasma_perp) / std::abs(plasma_perp)});
  }

  for (double wp : {1.0, 0.1, 0.01}) {
    const PlasmaDelta delta = plasma_delta(wp, unit_distance);
    rep.plasma_to_vacuum.push_back({wp, delta.d_par, delta.d_perp});
  }
  return rep;
}

} // namespace selfenergy::analysis
