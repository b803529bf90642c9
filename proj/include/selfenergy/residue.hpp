#pragma once

#include "selfenergy/dielectric.hpp"

namespace selfenergy {

/// Reflection data at the double pole k_z = i k_par.
struct ResidueData {
  cplx r_te;
  cplx r_tm;
  cplx dr_tm_dkz;
};

/// R_TE, R_TM and dR_TM/dk_z at k_z = i k_par. The derivative is taken by
/// dual-number differentiation of the cleared-denominator TM form.
/// Throws IllDefinedModel for DampedDrude (branch points at k_z = +-i k_par).
ResidueData residue_data(const DielectricModel &model, double k_par);

} // namespace selfenergy
