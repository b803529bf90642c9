#include "selfenergy/sweep.hpp"
#include "selfenergy/analysis.hpp"
#include "selfenergy/error.hpp"

#include <cmath>
#include <exception>
#include <sstream>

namespace selfenergy::sweep {

std::vector<double> Grid::points() const {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : double(i) / double(count - 1);
    xs.push_back(log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                     : min + t * (max - min));
  }
  if (count > 1) {
    xs.front() = min;
    xs.back() = max;
  }
  return xs;
}

Grid parse_grid(const std::string &text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');)
    parts.push_back(p);
  if (parts.size() < 3 || parts.size() > 4)
    throw Error(ErrorKind::ParseError, "grid must be min:max:count[:log], got '" + text + "'");
  Grid g;
  try {
    std::size_t used = 0;
    g.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    g.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    g.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::logic_error &) {
    throw Error(ErrorKind::ParseError, "malformed grid '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin")
      throw Error(ErrorKind::ParseError, "grid spacing must be 'log' or 'lin'");
    g.log = parts[3] == "log";
  }
  if (g.count < 1 || !(g.max >= g.min) || (g.count > 1 && !(g.max > g.min)))
    throw Error(ErrorKind::ParseError, "grid needs count >= 1 and max > min");
  if (g.log && !(g.min > 0.0))
    throw Error(ErrorKind::ParseError, "log grid needs min > 0");
  return g;
}

Parameter parse_parameter(const std::string &name) {
  if (name == "d") return Parameter::D;
  if (name == "n") return Parameter::N;
  if (name == "omega_p" || name == "omega-p") return Parameter::OmegaP;
  if (name == "omega_t" || name == "omega-t") return Parameter::OmegaT;
  if (name == "gamma") return Parameter::Gamma;
  throw Error(ErrorKind::ParseError, "unknown sweep parameter '" + name + "'");
}

std::string to_string(Parameter p) {
  switch (p) {
  case Parameter::D: return "d";
  case Parameter::N: return "n";
  case Parameter::OmegaP: return "omega_p";
  case Parameter::OmegaT: return "omega_t";
  case Parameter::Gamma: return "gamma";
  }
  return "?";
}

SweepPoint apply_parameter(const ShiftSpec &base, Parameter param, double x) {
  if (param == Parameter::D)
    return {base.model, Geometry(x)};
  const auto bad = [&] {
    return Error(ErrorKind::InvalidArgument, "model " + base.model.name() +
                                                 " has no parameter " +
                                                 to_string(param));
  };
  const auto &v = base.model.variant();
  DielectricModel m = base.model;
  switch (base.model.kind()) {
  case ModelKind::NonDispersive:
    if (param != Parameter::N) throw bad();
    m = DielectricModel::nondispersive(x);
    break;
  case ModelKind::Plasma:
    if (param != Parameter::OmegaP) throw bad();
    m = DielectricModel::plasma(x);
    break;
  case ModelKind::Lorentz: {
    const auto &l = std::get<Lorentz>(v);
    if (param == Parameter::OmegaP) m = DielectricModel::lorentz(x, l.omega_t);
    else if (param == Parameter::OmegaT) m = DielectricModel::lorentz(l.omega_p, x);
    else throw bad();
    break;
  }
  case ModelKind::DampedDrude: {
    const auto &dd = std::get<DampedDrude>(v);
    if (param == Parameter::OmegaP) m = DielectricModel::damped_drude(x, dd.gamma);
    else if (param == Parameter::Gamma) m = DielectricModel::damped_drude(dd.omega_p, x);
    else throw bad();
    break;
  }
  case ModelKind::PerfectMirror:
    throw bad();
  }
  return {m, base.geometry};
}

namespace {

ShiftResult shift_at(const ShiftSpec &base, Parameter param, double x) {
  const SweepPoint p = apply_parameter(base, param, x);
  return energy_shift(p.model, p.geometry, base.moments, base.coupling, base.tol,
                      base.method);
}

Figure1Row figure1_row(double omega_t_d, double chi0) {
  const double n = std::sqrt(1.0 + chi0);
  const Geometry unit(1.0);
  const GeometryFactors nd = nondisp_closed(n, unit);
  const GeometryFactors pm = pm_closed(unit);
  return {chi0, nd.g_perp / pm.g_perp, nd.g_par / pm.g_par,
          analysis::lorentz_ratio_perp(chi0, omega_t_d),
          analysis::lorentz_ratio_par(chi0, omega_t_d)};
}

Figure2Row figure2_row(double x, const std::vector<double> &omega_t_d, double tol) {
  const Geometry unit(1.0);
  const GeometryFactors pm = pm_closed(unit);
  const GeometryFactors pl = plasma_factors(x, unit, tol).g;
  Figure2Row row{x, pl.g_perp / pm.g_perp, pl.g_par / pm.g_par, {}, {}};
  for (double wt : omega_t_d) {
    const GeometryFactors g = lorentz_closed(x, wt, unit);
    row.r_lorentz_perp.push_back(g.g_perp / pm.g_perp);
    row.r_lorentz_par.push_back(g.g_par / pm.g_par);
  }
  return row;
}

// Row i goes to slot i; the first failing row (by index) is rethrown.
template <class Row, class Fn>
std::vector<Row> map_parallel(const std::vector<double> &xs, Fn fn) {
  const long n = static_cast<long>(xs.size());
  std::vector<Row> rows(xs.size());
  std::vector<std::exception_ptr> failures(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = fn(xs[i]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto &f : failures)
    if (f)
      std::rethrow_exception(f);
  return rows;
}

template <class Row, class Fn>
std::vector<Row> map_serial(const std::vector<double> &xs, Fn fn) {
  std::vector<Row> rows;
  rows.reserve(xs.size());
  for (double x : xs)
    rows.push_back(fn(x));
  return rows;
}

} // namespace

std::vector<ShiftResult> shifts_serial(const ShiftSpec &base, Parameter param,
                                       const std::vector<double> &xs) {
  return map_serial<ShiftResult>(xs, [&](double x) { return shift_at(base, param, x); });
}

std::vector<ShiftResult> shifts_parallel(const ShiftSpec &base, Parameter param,
                                         const std::vector<double> &xs) {
  return map_parallel<ShiftResult>(xs,
                                   [&](double x) { return shift_at(base, param, x); });
}

std::vector<Figure1Row> figure1_serial(double omega_t_d,
                                       const std::vector<double> &chi0) {
  return map_serial<Figure1Row>(chi0,
                                [&](double c) { return figure1_row(omega_t_d, c); });
}

std::vector<Figure1Row> figure1_parallel(double omega_t_d,
                                         const std::vector<double> &chi0) {
  return map_parallel<Figure1Row>(chi0,
                                  [&](double c) { return figure1_row(omega_t_d, c); });
}

std::vector<Figure2Row> figure2_serial(const std::vector<double> &omega_p_d,
                                       const std::vector<double> &omega_t_d,
                                       double tol) {
  return map_serial<Figure2Row>(
      omega_p_d, [&](double x) { return figure2_row(x, omega_t_d, tol); });
}

std::vector<Figure2Row> figure2_parallel(const std::vector<double> &omega_p_d,
                                         const std::vector<double> &omega_t_d,
                                         double tol) {
  return map_parallel<Figure2Row>(
      omega_p_d, [&](double x) { return figure2_row(x, omega_t_d, tol); });
}

} // namespace selfenergy::sweep
