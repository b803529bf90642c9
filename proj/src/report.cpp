#include "selfenergy/report.hpp"
#include "selfenergy/format.hpp"

#include <sstream>

namespace selfenergy::report {

namespace {

constexpr const char *shift_columns =
    "model,params,d,g_par,g_perp,ratio_par,ratio_perp,delta_e,method,est_error";

void write_meta(std::ostringstream &os, const Metadata &meta) {
  os << "# selfenergy " << library_version << '\n';
  for (const auto &line : meta.lines)
    os << "# " << line << '\n';
}

void write_shift(std::ostringstream &os, const DielectricModel &model,
                 const Geometry &geometry, const ShiftResult &r) {
  os << model.name() << ',' << model.params_string() << ','
     << format_double(geometry.d()) << ',' << format_double(r.g.g_par) << ','
     << format_double(r.g.g_perp) << ',' << format_double(r.ratio_par) << ','
     << format_double(r.ratio_perp) << ',' << format_double(r.delta_e) << ','
     << to_string(r.method) << ',' << format_double(r.est_error) << '\n';
}

std::string label(double x) { return format_double(x); }

} // namespace

std::string compute_csv(const Metadata &meta, const DielectricModel &model,
                        const Geometry &geometry, const ShiftResult &r) {
  std::ostringstream os;
  write_meta(os, meta);
  os << shift_columns << '\n';
  write_shift(os, model, geometry, r);
  return os.str();
}

std::string sweep_csv(const Metadata &meta, const sweep::ShiftSpec &base,
                      sweep::Parameter param, const std::vector<double> &xs,
                      const std::vector<ShiftResult> &rows) {
  std::ostringstream os;
  write_meta(os, meta);
  os << "sweep_" << to_string(param) << ',' << shift_columns << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const sweep::SweepPoint p = sweep::apply_parameter(base, param, xs[i]);
    os << format_double(xs[i]) << ',';
    write_shift(os, p.model, p.geometry, rows[i]);
  }
  return os.str();
}

std::string figure1_csv(double omega_t_d, const std::vector<double> &chi0,
                        Kernel kernel) {
  const auto rows = kernel == Kernel::Parallel
                        ? sweep::figure1_parallel(omega_t_d, chi0)
                        : sweep::figure1_serial(omega_t_d, chi0);
  std::ostringstream os;
  write_meta(os, {{"figure1: ratios to the perfect mirror vs chi0",
                   "omega_t_d=" + format_double(omega_t_d),
                   "nondisp: n^2 = 1 + chi0; lorentz: omega_p = sqrt(chi0) omega_t"}});
  os << "chi0,r_perfect,r_nondisp_perp,r_nondisp_par,r_lorentz_perp,r_lorentz_par\n";
  for (const auto &r : rows)
    os << format_double(r.chi0) << ",1," << format_double(r.r_nondisp_perp) << ','
       << format_double(r.r_nondisp_par) << ',' << format_double(r.r_lorentz_perp)
       << ',' << format_double(r.r_lorentz_par) << '\n';
  return os.str();
}

std::string figure2_csv(const std::vector<double> &omega_p_d, double tol,
                        Kernel kernel) {
  const auto &wts = figure2_omega_t_d;
  const auto rows = kernel == Kernel::Parallel
                        ? sweep::figure2_parallel(omega_p_d, wts, tol)
                        : sweep::figure2_serial(omega_p_d, wts, tol);
  std::ostringstream os;
  write_meta(os, {{"figure2: ratios to the perfect mirror vs omega_p d",
                   "plasma via perfect mirror + corrections, tol=" + format_double(tol),
                   "lorentz columns labelled by omega_t d"}});
  os << "omega_p_d,r_plasma_perp";
  for (double wt : wts)
    os << ",r_lorentz_perp_" << label(wt);
  os << ",r_plasma_par";
  for (double wt : wts)
    os << ",r_lorentz_par_" << label(wt);
  os << '\n';
  for (const auto &r : rows) {
    os << format_double(r.omega_p_d) << ',' << format_double(r.r_plasma_perp);
    for (double v : r.r_lorentz_perp)
      os << ',' << format_double(v);
    os << ',' << format_double(r.r_plasma_par);
    for (double v : r.r_lorentz_par)
      os << ',' << format_double(v);
    os << '\n';
  }
  return os.str();
}

} // namespace selfenergy::report
