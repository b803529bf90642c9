#pragma once

// Grid kernels. Each has a serial reference and an OpenMP version; both
// write row i into slot i, so the outputs are identical.

#include "selfenergy/dielectric.hpp"
#include "selfenergy/shift_engine.hpp"

#include <string>
#include <vector>

namespace selfenergy::sweep {

/// min:max:count[:log]
struct Grid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log = false;

  std::vector<double> points() const;
};

Grid parse_grid(const std::string &text);

enum class Parameter { D, N, OmegaP, OmegaT, Gamma };
Parameter parse_parameter(const std::string &name);
std::string to_string(Parameter p);

struct SweepPoint {
  DielectricModel model;
  Geometry geometry;
};

struct ShiftSpec {
  DielectricModel model;
  Geometry geometry;
  MomentumMoments moments;
  Coupling coupling;
  double tol = default_tolerance;
  MethodRequest method = MethodRequest::Auto;
};

/// The spec with `param` replaced by x (model rebuilt, validating ranges).
SweepPoint apply_parameter(const ShiftSpec &base, Parameter param, double x);

std::vector<ShiftResult> shifts_serial(const ShiftSpec &base, Parameter param,
                                       const std::vector<double> &xs);
std::vector<ShiftResult> shifts_parallel(const ShiftSpec &base, Parameter param,
                                         const std::vector<double> &xs);

struct Figure1Row {
  double chi0;
  double r_nondisp_perp;
  double r_nondisp_par;
  double r_lorentz_perp;
  double r_lorentz_par;
};
std::vector<Figure1Row> figure1_serial(double omega_t_d,
                                       const std::vector<double> &chi0);
std::vector<Figure1Row> figure1_parallel(double omega_t_d,
                                         const std::vector<double> &chi0);

struct Figure2Row {
  double omega_p_d;
  double r_plasma_perp;
  double r_plasma_par;
  std::vector<double> r_lorentz_perp; // one per omega_T d
  std::vector<double> r_lorentz_par;
};
std::vector<Figure2Row> figure2_serial(const std::vector<double> &omega_p_d,
                                       const std::vector<double> &omega_t_d,
                                       double tol);
std::vector<Figure2Row> figure2_parallel(const std::vector<double> &omega_p_d,
                                         const std::vector<double> &omega_t_d,
                                         double tol);

} // namespace selfenergy::sweep
