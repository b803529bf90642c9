#pragma once

#include "selfenergy/dielectric.hpp"
#include "selfenergy/dual.hpp"
#include "selfenergy/error.hpp"

#include <cmath>
#include <limits>

namespace selfenergy {

/// Vacuum-side and medium-side normal wavenumbers for one k_par.
struct WaveVectors {
  double k_par;
  cplx k_z;
  cplx k_z_d;
};

/// Medium-side normal wavenumber. For both-real propagating waves the sign
/// follows sgn(k_z); otherwise Im(k_z_d) >= 0, ties broken toward Re >= 0.
cplx kz_medium(const DielectricModel &model, double k_par, cplx k_z);
WaveVectors wave_vectors(const DielectricModel &model, double k_par, cplx k_z);

/// Left-incidence (vacuum side) reflection coefficients.
cplx r_te(const DielectricModel &model, double k_par, cplx k_z);
cplx r_tm(const DielectricModel &model, double k_par, cplx k_z);

/// Coefficients for a wave incident from inside a non-dispersive medium,
/// unit amplitude on the TE/TM basis vectors.
struct RightIncidence {
  cplx t_te;
  cplx t_tm;
  cplx r_te_right;
  cplx r_tm_right;
  /// Normal wavenumber of the transmitted vacuum wave (travelling toward
  /// z -> -infinity, or decaying there when evanescent).
  cplx k_z_vacuum;
  bool evanescent;
};

/// k_z_d >= 0 is the magnitude of the incoming medium normal wavenumber.
RightIncidence transmission_right(const DielectricModel &model, double k_par,
                                  double k_z_d);

namespace detail {

/// Right-incidence coefficients from the medium wavenumber K and the
/// vacuum-side q (transmitted wave ~ e^{-i q z}).
RightIncidence right_incidence(double n, cplx K, cplx q);

inline bool is_real(const cplx &z) { return z.imag() == 0.0; }

inline cplx choose_branch(cplx radicand, cplx k_z) {
  if (!std::isfinite(radicand.real()) || !std::isfinite(radicand.imag()))
    throw Error(ErrorKind::BranchAmbiguity,
                "radicand of k_z^d is not finite");
  cplx s = std::sqrt(radicand);
  if (is_real(radicand) && radicand.real() >= 0.0 && is_real(k_z)) {
    // propagating on both sides: sgn(k_z^d) = sgn(k_z)
    const double mag = std::sqrt(radicand.real());
    return {k_z.real() < 0.0 ? -mag : mag, 0.0};
  }
  if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0))
    s = -s;
  return s;
}

inline cplx value_of(const cplx &z) { return z; }
inline cplx value_of(const Dual<cplx> &z) { return z.v; }

template <class T> T sqrt_branch(const T &radicand, const cplx &k_z_value) {
  if constexpr (std::is_same_v<T, cplx>) {
    return choose_branch(radicand, k_z_value);
  } else {
    return sqrt_with_root(radicand, choose_branch(radicand.v, k_z_value));
  }
}

/// k_z^d as a generic scalar. The plasma radicand is simplified to
/// k_z^2 - omega_p^2 so it stays finite where eps has its pole.
template <class T>
T kz_medium_t(const DielectricModel &model, double k_par, const T &k_z) {
  const T k2(k_par * k_par);
  const T w2 = k_z * k_z + k2;
  const T radicand = detail::cleared_epsilon_w2(model, w2) - k2;
  return sqrt_branch(radicand, value_of(k_z));
}

template <class T> struct FresnelParts {
  T num;
  T den;
};

template <class T>
FresnelParts<T> r_te_parts(const DielectricModel &model, double k_par,
                           const T &k_z) {
  const T kzd = kz_medium_t(model, k_par, k_z);
  return {k_z - kzd, k_z + kzd};
}

/// TM reflection as num/den in cleared-denominator form: both multiplied by
/// w2 = k_z^2 + k_par^2 for the plasma, plain eps form otherwise.
template <class T>
FresnelParts<T> r_tm_parts(const DielectricModel &model, double k_par,
                           const T &k_z) {
  const T kzd = kz_medium_t(model, k_par, k_z);
  if (model.kind() == ModelKind::Plasma) {
    const T w2 = k_z * k_z + T(k_par * k_par);
    const T eps_w2 = detail::cleared_epsilon_w2(model, w2);
    return {eps_w2 * k_z - w2 * kzd, eps_w2 * k_z + w2 * kzd};
  }
  const T eps = detail::epsilon_of_w2(model, k_z * k_z + T(k_par * k_par));
  return {eps * k_z - kzd, eps * k_z + kzd};
}

// |den| must not vanish relative to the size of its two terms.
inline void check_denominator(const cplx &den, double scale, const char *what) {
  if (!(std::abs(den) > 64.0 * std::numeric_limits<double>::epsilon() * scale))
    throw Error(ErrorKind::SingularDenominator,
                std::string(what) + " denominator vanishes (surface-mode pole)");
}

} // namespace detail

} // namespace selfenergy
