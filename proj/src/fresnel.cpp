#include "selfenergy/fresnel.hpp"

namespace selfenergy {

namespace {

void require_finite_model(const DielectricModel &model, double k_par) {
  if (model.kind() == ModelKind::PerfectMirror)
    throw Error(ErrorKind::UnsupportedModel,
                "perfect-mirror coefficients are constants (use residue_data)");
  if (!(k_par > 0.0) || !std::isfinite(k_par))
    throw Error(ErrorKind::InvalidArgument, "k_par must be positive");
}

cplx ratio(const detail::FresnelParts<cplx> &p, double scale, const char *what) {
  detail::check_denominator(p.den, scale, what);
  return p.num / p.den;
}

} // namespace

cplx kz_medium(const DielectricModel &model, double k_par, cplx k_z) {
  require_finite_model(model, k_par);
  return detail::kz_medium_t(model, k_par, k_z);
}

WaveVectors wave_vectors(const DielectricModel &model, double k_par, cplx k_z) {
  return {k_par, k_z, kz_medium(model, k_par, k_z)};
}

cplx r_te(const DielectricModel &model, double k_par, cplx k_z) {
  require_finite_model(model, k_par);
  const auto parts = detail::r_te_parts(model, k_par, k_z);
  return ratio(parts, std::abs(k_z) + std::abs(parts.den - k_z), "TE");
}

cplx r_tm(const DielectricModel &model, double k_par, cplx k_z) {
  require_finite_model(model, k_par);
  const auto parts = detail::r_tm_parts(model, k_par, k_z);
  return ratio(parts, 0.5 * (std::abs(parts.num) + std::abs(parts.den)), "TM");
}

RightIncidence transmission_right(const DielectricModel &model, double k_par,
                                  double k_z_d) {
  const auto *nd = std::get_if<NonDispersive>(&model.variant());
  if (nd == nullptr)
    throw Error(ErrorKind::UnsupportedModel,
                "right-incidence coefficients need a non-dispersive medium");
  if (!(k_par > 0.0) || !(k_z_d >= 0.0) || !std::isfinite(k_z_d))
    throw Error(ErrorKind::InvalidArgument, "need k_par > 0 and k_z_d >= 0");

  const double n = nd->n;
  const double eps = n * n;
  const double omega2 = (k_z_d * k_z_d + k_par * k_par) / eps;
  const double q2 = omega2 - k_par * k_par;
  if (q2 == 0.0)
    throw Error(ErrorKind::EvanescentBranchError,
                "critical angle: transmitted wave neither decays nor propagates");

  // Transmitted vacuum wave ~ e^{-i q z}; q >= 0 travelling, q = i kappa
  // evanescent so that it decays as z -> -infinity.
  const bool evanescent = q2 < 0.0;
  const cplx q = evanescent ? cplx(0.0, std::sqrt(-q2)) : cplx(std::sqrt(q2), 0.0);
  return detail::right_incidence(n, k_z_d, q);
}

RightIncidence detail::right_incidence(double n, cplx K, cplx q) {
  const double eps = n * n;
  RightIncidence out;
  out.evanescent = q.imag() > 0.0;
  out.k_z_vacuum = -q;
  out.r_te_right = (K - q) / (K + q);
  out.t_te = 2.0 * K / (K + q);
  out.r_tm_right = (K - eps * q) / (K + eps * q);
  out.t_tm = 2.0 * n * K / (K + eps * q);
  return out;
}

} // namespace selfenergy
