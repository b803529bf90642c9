#pragma once

// Brute-force boundary mode sum for the non-dispersive half-space. Works
// from the explicit left/right-incident plane-wave modes only; nothing here
// touches the residue formulas.

#include "selfenergy/dielectric.hpp"
#include "selfenergy/geometry.hpp"

#include <array>

namespace selfenergy::modesum {

enum class Incidence { Left, Right };
enum class Polarization { TE, TM };

/// One mode family member. `k_normal` is k_z (Left, vacuum side, > 0) or the
/// magnitude of the incoming medium wavenumber k_z^d (Right).
struct ModeSpec {
  Incidence incidence = Incidence::Left;
  Polarization polarization = Polarization::TE;
  double k_par = 0.0;
  double k_normal = 0.0;

  /// Right-incident and beyond the critical angle, |k_z^d| < sqrt(n^2-1) k_par.
  bool evanescent(double n) const;
};

using Vec3 = std::array<cplx, 3>;

/// Unit polarization vectors for k = (k_par x_hat, k_z z_hat), |k| = omega.
/// TE = k_par_hat x z_hat, TM = (k_par_hat k_z - z_hat k_par)/omega; the
/// formulas are continued as-is for complex k_z.
struct PolarizationBasis {
  static Vec3 te();
  static Vec3 tm(double k_par, cplx k_z, double omega);
};

/// Vector potential amplitude and B = curl A (per unit i) at height z,
/// dropping the common e^{i k_par x} factor.
struct ModeField {
  Vec3 a;
  Vec3 b;
};
ModeField mode_field(double n, const ModeSpec &mode, double z);

/// Boundary-dependent part of (|f_par|^2, |f_z|^2) * 2 omega (2 pi)^3.
struct Intensity {
  double i_par = 0.0;
  double i_perp = 0.0;
};
/// Left modes: reflection interference term. Right modes: evanescent
/// transmitted intensity (travelling Right modes throw NotEvanescent).
Intensity boundary_intensity(double n, const ModeSpec &mode, double z);

struct ModeSumResult {
  GeometryFactors g;
  double est_error = 0.0;
};

/// Mode sum over left-incident (k_z in (0, inf)) and right evanescent
/// (k_z^d in (0, Gamma)) modes, in the GeometryFactors normalization.
ModeSumResult boundary_mode_sum(double n, const Geometry &geometry,
                                double tol = 1e-4);

/// Channel pieces of the inner integral at fixed k_par, already multiplied
/// by k_par / omega^2 and integrated over the normal wavenumber.
struct InnerChannels {
  double left_te_par = 0.0;
  double left_tm_par = 0.0;
  double left_tm_perp = 0.0;
  double right_par = 0.0;
  double right_perp = 0.0;
};
InnerChannels inner_channels(double n, double k_par, double d);

} // namespace selfenergy::modesum
