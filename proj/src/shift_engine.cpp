#include "selfenergy/shift_engine.hpp"
#include "selfenergy/error.hpp"
#include "selfenergy/quadrature.hpp"
#include "selfenergy/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace selfenergy {

namespace {

// Stop scanning once the integrand is this far below its peak, relative to
// the requested tolerance.
constexpr double tail_cut_factor = 1e-3;

void require_admissible(const DielectricModel &model) {
  if (classify(model) == ModeBasisClass::IllDefined)
    throw Error(ErrorKind::IllDefinedModel, damped_drude_rejection_message());
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-3))
    throw Error(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1e-3]");
}

double real_part_checked(cplx value, double scale, double tol) {
  if (std::abs(value.imag()) > tol * scale)
    throw Error(ErrorKind::NonVanishingImaginaryPart,
                "residue integrand has imaginary part " +
                    std::to_string(value.imag()) + " (scale " +
                    std::to_string(scale) + ")");
  return value.real();
}

} // namespace

std::string to_string(Method m) {
  switch (m) {
  case Method::ClosedForm: return "ClosedForm";
  case Method::Quadrature: return "Quadrature";
  case Method::PMPlusCorrections: return "PMPlusCorrections";
  }
  return "Unknown";
}

std::string damped_drude_rejection_message() {
  return "damped Drude surface: the TM reflection coefficient has branch "
         "points at k_z = +-i k_par, exactly where the residue integrals over "
         "R_TE and R_TM are evaluated, so the shift formulas are ambiguous and "
         "no value is produced";
}

QuadratureFactors geometry_factors_quadrature(const DielectricModel &model,
                                              const Geometry &geometry,
                                              double tol) {
  require_admissible(model);
  check_tol(tol);
  const double d = geometry.d();
  const double z = geometry.z();

  // Integrand in u = 2 k d, including dk = du / (2d).
  const auto integrand = [&](double u, bool parallel) {
    const double k = u / (2.0 * d);
    const ResidueData r = residue_data(model, k);
    const cplx i_drtm = cplx(0.0, 1.0) * r.dr_tm_dkz;
    cplx bracket;
    double scale;
    if (parallel) {
      const cplx t1 = -2.0 * r.r_te / k;
      const cplx t3 = r.r_tm * (2.0 * z + 1.0 / k);
      bracket = t1 + i_drtm + t3;
      scale = std::abs(t1) + std::abs(i_drtm) + std::abs(t3);
    } else {
      const cplx t3 = -r.r_tm * (1.0 / k - 2.0 * z);
      bracket = i_drtm + t3;
      scale = std::abs(i_drtm) + std::abs(t3);
    }
    const double re = real_part_checked(bracket, scale, tol);
    return k * std::exp(2.0 * k * z) * re / (2.0 * d);
  };

  const auto par = quadrature::integrate_decaying(
      [&](double u) { return integrand(u, true); }, tol, tol * tail_cut_factor);
  const auto perp = quadrature::integrate_decaying(
      [&](double u) { return integrand(u, false); }, tol, tol * tail_cut_factor);
  return {{par.value, perp.value}, std::max(par.rel_error(), perp.rel_error())};
}

GeometryFactors pm_closed(const Geometry &geometry) {
  return {1.0 / geometry.d(), -1.0 / geometry.d()};
}

GeometryFactors nondisp_closed(double n, const Geometry &geometry) {
  if (!(n > 1.0))
    throw Error(ErrorKind::InvalidArgument, "n must exceed 1");
  const double e = n * n;
  const double z = geometry.z();
  const double den = (1.0 + e) * (1.0 + e);
  return {e * (e - 1.0) / (den * z), (2.0 * e * e - e - 1.0) / (den * z)};
}

GeometryFactors lorentz_closed(double omega_p, double omega_t,
                               const Geometry &geometry) {
  if (!(omega_p > 0.0) || !(omega_t > 0.0))
    throw Error(ErrorKind::InvalidArgument, "omega_p and omega_t must be positive");
  const double wp2 = omega_p * omega_p;
  const double wt2 = omega_t * omega_t;
  const double z = geometry.z();
  const double pre = wp2 / ((wp2 + 2.0 * wt2) * (wp2 + 2.0 * wt2));
  const double z3 = z * z * z;
  return {pre * (1.0 / z3 + (wp2 + wt2) / z),
          pre * (1.0 / z3 + (2.0 * wp2 + 3.0 * wt2) / z)};
}

double lorentz_perp_chi(double chi0, double omega_t_d, const Geometry &geometry) {
  if (!(chi0 > 0.0) || !(omega_t_d > 0.0))
    throw Error(ErrorKind::InvalidArgument, "chi0 and omega_t d must be positive");
  const double a = omega_t_d * omega_t_d; // (omega_T z)^2
  const double z = geometry.z();
  return (1.0 / z) * chi0 / a * (1.0 + a * (3.0 + 2.0 * chi0)) /
         ((2.0 + chi0) * (2.0 + chi0));
}

PlasmaDelta plasma_delta(double omega_p, const Geometry &geometry, double tol) {
  if (!(omega_p > 0.0))
    throw Error(ErrorKind::InvalidArgument, "omega_p must be positive");
  check_tol(tol);
  const double d = geometry.d();
  const double wp2 = omega_p * omega_p;

  const auto perp = quadrature::integrate_decaying(
      [&](double u) {
        const double k = u / (2.0 * d);
        return k * std::hypot(k, omega_p) * std::exp(-u) / (2.0 * d);
      },
      tol, tol * tail_cut_factor);
  const auto par = quadrature::integrate_decaying(
      [&](double u) {
        const double k = u / (2.0 * d);
        return k * (std::hypot(k, omega_p) - 0.5 * k) * std::exp(-u) / (2.0 * d);
      },
      tol, tol * tail_cut_factor);
  return {-8.0 / wp2 * par.value, -4.0 / wp2 * perp.value,
          std::max(par.rel_error(), perp.rel_error())};
}

QuadratureFactors plasma_factors(double omega_p, const Geometry &geometry,
                                 double tol) {
  const PlasmaDelta delta = plasma_delta(omega_p, geometry, tol);
  const GeometryFactors pm = pm_closed(geometry);
  const GeometryFactors g{pm.g_par + delta.d_par, pm.g_perp + delta.d_perp};
  // Relative errors of the corrections, rescaled to the totals.
  const double err = delta.est_error *
                     std::max(std::abs(delta.d_par) / std::abs(g.g_par),
                              std::abs(delta.d_perp) / std::abs(g.g_perp));
  return {g, err};
}

QuadratureFactors geometry_factors(const DielectricModel &model,
                                   const Geometry &geometry,
                                   MethodRequest request, double tol,
                                   Method *used) {
  require_admissible(model);
  check_tol(tol);
  const auto set = [used](Method m) {
    if (used != nullptr)
      *used = m;
  };
  if (request == MethodRequest::Quadrature) {
    set(Method::Quadrature);
    return geometry_factors_quadrature(model, geometry, tol);
  }
  switch (model.kind()) {
  case ModelKind::PerfectMirror:
    set(Method::ClosedForm);
    return {pm_closed(geometry), 0.0};
  case ModelKind::NonDispersive:
    set(Method::ClosedForm);
    return {nondisp_closed(std::get<NonDispersive>(model.variant()).n, geometry),
            0.0};
  case ModelKind::Lorentz: {
    const auto &m = std::get<Lorentz>(model.variant());
    set(Method::ClosedForm);
    return {lorentz_closed(m.omega_p, m.omega_t, geometry), 0.0};
  }
  case ModelKind::Plasma:
    set(Method::PMPlusCorrections);
    return plasma_factors(std::get<Plasma>(model.variant()).omega_p, geometry, tol);
  case ModelKind::DampedDrude:
    break;
  }
  throw Error(ErrorKind::IllDefinedModel, damped_drude_rejection_message());
}

ShiftResult energy_shift(const DielectricModel &model, const Geometry &geometry,
                         const MomentumMoments &moments, const Coupling &coupling,
                         double tol, MethodRequest request) {
  if (!(moments.p2_par >= 0.0) || !(moments.p2_perp >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "momentum moments must be >= 0");
  if (!(coupling.e2 > 0.0) || !(coupling.m > 0.0))
    throw Error(ErrorKind::InvalidArgument, "e2 and mass must be positive");

  ShiftResult out;
  const QuadratureFactors q =
      geometry_factors(model, geometry, request, tol, &out.method);
  out.g = q.g;
  out.est_error = q.est_error;

  const GeometryFactors pm = pm_closed(geometry);
  out.ratio_par = out.g.g_par / pm.g_par;
  out.ratio_perp = out.g.g_perp / pm.g_perp;

  constexpr double pi = std::numbers::pi;
  const double pre = coupling.e2 / (coupling.m * coupling.m);
  out.delta_e = pre * (moments.p2_par * out.g.g_par / (32.0 * pi) +
                       moments.p2_perp * out.g.g_perp / (16.0 * pi));
  return out;
}

} // namespace selfenergy
