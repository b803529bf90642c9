#include "selfenergy/residue.hpp"
#include "selfenergy/fresnel.hpp"

namespace selfenergy {

ResidueData residue_data(const DielectricModel &model, double k_par) {
  if (!(k_par > 0.0) || !std::isfinite(k_par))
    throw Error(ErrorKind::InvalidArgument, "k_par must be positive");

  switch (model.kind()) {
  case ModelKind::PerfectMirror:
    return {-1.0, 1.0, 0.0};
  case ModelKind::DampedDrude:
    throw Error(ErrorKind::IllDefinedModel,
                "damped Drude reflection coefficient has branch points at "
                "k_z = +-i k_par; the residue formulas are ambiguous");
  default:
    break;
  }

  using D = Dual<cplx>;
  const D k_z = D::variable(cplx(0.0, k_par));

  const auto te = detail::r_te_parts(model, k_par, k_z.v);
  detail::check_denominator(te.den, k_par, "TE");

  const auto tm = detail::r_tm_parts(model, k_par, k_z);
  detail::check_denominator(tm.den.v,
                            0.5 * (std::abs(tm.num.v) + std::abs(tm.den.v)),
                            "TM");
  const D r = tm.num / tm.den;
  return {te.num / te.den, r.v, r.d};
}

} // namespace selfenergy
