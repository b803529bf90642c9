#pragma once

#include "selfenergy/dielectric.hpp"
#include "selfenergy/geometry.hpp"

#include <string>
#include <utility>

namespace selfenergy {

enum class Method { ClosedForm, Quadrature, PMPlusCorrections };
std::string to_string(Method m);

/// Which route energy_shift should take. Auto picks the closed form where
/// one exists and PM + corrections for the plasma.
enum class MethodRequest { Auto, Quadrature };

struct ShiftResult {
  double delta_e = 0.0;
  GeometryFactors g;
  double ratio_par = 0.0;
  double ratio_perp = 0.0;
  Method method = Method::ClosedForm;
  double est_error = 0.0;
};

inline constexpr double default_tolerance = 1e-10;

struct QuadratureFactors {
  GeometryFactors g;
  double est_error = 0.0;
};

/// Numerical residue integrals over k_par for any admissible model.
QuadratureFactors geometry_factors_quadrature(const DielectricModel &model,
                                              const Geometry &geometry,
                                              double tol = default_tolerance);

GeometryFactors pm_closed(const Geometry &geometry);
GeometryFactors nondisp_closed(double n, const Geometry &geometry);
GeometryFactors lorentz_closed(double omega_p, double omega_t,
                               const Geometry &geometry);
/// Perpendicular Lorentz factor written through chi0 and omega_T d.
double lorentz_perp_chi(double chi0, double omega_t_d, const Geometry &geometry);

/// Plasma corrections to the mirror, in the same normalization as
/// GeometryFactors (so g_plasma = pm_closed + delta).
struct PlasmaDelta {
  double d_par = 0.0;
  double d_perp = 0.0;
  double est_error = 0.0;
};
PlasmaDelta plasma_delta(double omega_p, const Geometry &geometry,
                         double tol = default_tolerance);
QuadratureFactors plasma_factors(double omega_p, const Geometry &geometry,
                                 double tol = default_tolerance);

/// Closed form / corrections route, whichever the model admits.
QuadratureFactors geometry_factors(const DielectricModel &model,
                                   const Geometry &geometry,
                                   MethodRequest request, double tol,
                                   Method *used = nullptr);

ShiftResult energy_shift(const DielectricModel &model, const Geometry &geometry,
                         const MomentumMoments &moments, const Coupling &coupling,
                         double tol = default_tolerance,
                         MethodRequest request = MethodRequest::Auto);

/// Thrown text for damped-Drude rejection.
std::string damped_drude_rejection_message();

} // namespace selfenergy
