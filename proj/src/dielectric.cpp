#include "selfenergy/dielectric.hpp"
#include "selfenergy/format.hpp"

#include <cmath>
#include <limits>

namespace selfenergy {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok)
    throw Error(ErrorKind::InvalidArgument, what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

DielectricModel DielectricModel::perfect_mirror() {
  return DielectricModel(PerfectMirror{});
}

DielectricModel DielectricModel::nondispersive(double n) {
  require(std::isfinite(n) && n > 1.0, "non-dispersive model requires n > 1");
  return DielectricModel(NonDispersive{n});
}

DielectricModel DielectricModel::plasma(double omega_p) {
  require(positive(omega_p), "plasma model requires omega_p > 0");
  return DielectricModel(Plasma{omega_p});
}

DielectricModel DielectricModel::lorentz(double omega_p, double omega_t) {
  require(positive(omega_p), "Lorentz model requires omega_p > 0");
  require(positive(omega_t), "Lorentz model requires omega_t > 0");
  return DielectricModel(Lorentz{omega_p, omega_t});
}

DielectricModel DielectricModel::damped_drude(double omega_p, double gamma) {
  require(positive(omega_p), "damped Drude model requires omega_p > 0");
  require(gamma >= 0.0 && std::isfinite(gamma), "damped Drude model requires gamma >= 0");
  return DielectricModel(DampedDrude{omega_p, gamma});
}

std::string DielectricModel::name() const {
  return std::visit(
      overloaded{[](const PerfectMirror &) { return std::string("mirror"); },
                 [](const NonDispersive &) { return std::string("nondisp"); },
                 [](const Plasma &) { return std::string("plasma"); },
                 [](const Lorentz &) { return std::string("lorentz"); },
                 [](const DampedDrude &) { return std::string("damped_drude"); }},
      m_model);
}

std::string DielectricModel::params_string() const {
  return std::visit(
      overloaded{
          [](const PerfectMirror &) { return std::string(); },
          [](const NonDispersive &m) { return "n=" + format_double(m.n); },
          [](const Plasma &m) { return "omega_p=" + format_double(m.omega_p); },
          [](const Lorentz &m) {
            return "omega_p=" + format_double(m.omega_p) +
                   ";omega_t=" + format_double(m.omega_t);
          },
          [](const DampedDrude &m) {
            return "omega_p=" + format_double(m.omega_p) +
                   ";gamma=" + format_double(m.gamma);
          }},
      m_model);
}

DielectricModel DielectricModel::scaled(double s) const {
  require(positive(s), "scale factor must be positive");
  return std::visit(
      overloaded{
          [](const PerfectMirror &) { return perfect_mirror(); },
          [](const NonDispersive &m) { return nondispersive(m.n); },
          [s](const Plasma &m) { return plasma(s * m.omega_p); },
          [s](const Lorentz &m) { return lorentz(s * m.omega_p, s * m.omega_t); },
          [s](const DampedDrude &m) {
            return damped_drude(s * m.omega_p, s * m.gamma);
          }},
      m_model);
}

std::string to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::PerfectMirror: return "PerfectMirror";
  case ModelKind::NonDispersive: return "NonDispersive";
  case ModelKind::Plasma: return "Plasma";
  case ModelKind::Lorentz: return "Lorentz";
  case ModelKind::DampedDrude: return "DampedDrude";
  }
  return "Unknown";
}

std::string to_string(ModeBasisClass c) {
  switch (c) {
  case ModeBasisClass::HermitianModes: return "HermitianModes";
  case ModeBasisClass::ResponseOnly: return "ResponseOnly";
  case ModeBasisClass::IllDefined: return "IllDefined";
  }
  return "Unknown";
}

cplx epsilon_at_omega(const DielectricModel &model, cplx omega) {
  const auto pole = [](const char *what) {
    return Error(ErrorKind::PoleAtFrequency, what);
  };
  return std::visit(
      overloaded{
          [](const PerfectMirror &) -> cplx {
            throw Error(ErrorKind::UnsupportedModel,
                        "perfect mirror has no finite permittivity");
          },
          [](const NonDispersive &m) -> cplx { return m.n * m.n; },
          [&](const Plasma &m) -> cplx {
            if (omega == 0.0)
              throw pole("plasma permittivity has a pole at omega = 0");
            return 1.0 - m.omega_p * m.omega_p / (omega * omega);
          },
          [&](const Lorentz &m) -> cplx {
            const cplx den = omega * omega - m.omega_t * m.omega_t;
            if (den == 0.0)
              throw pole("Lorentz permittivity has a pole at omega = +-omega_t");
            return 1.0 - m.omega_p * m.omega_p / den;
          },
          [&](const DampedDrude &m) -> cplx {
            const cplx den = omega * (omega + cplx(0.0, m.gamma));
            if (den == 0.0)
              throw pole("damped Drude permittivity has a pole at omega = 0");
            return 1.0 - m.omega_p * m.omega_p / den;
          }},
      model.variant());
}

cplx epsilon_at_kz(const DielectricModel &model, double k_par, cplx k_z) {
  if (!(k_par > 0.0))
    throw Error(ErrorKind::InvalidArgument, "k_par must be positive");
  const cplx w2 = k_z * k_z + k_par * k_par;
  switch (model.kind()) {
  case ModelKind::PerfectMirror:
    throw Error(ErrorKind::UnsupportedModel,
                "perfect mirror has no finite permittivity");
  case ModelKind::Plasma:
  case ModelKind::DampedDrude:
    if (w2 == 0.0)
      throw Error(ErrorKind::SingularPoint,
                  "k_z^2 + k_par^2 = 0 is a pole of the permittivity",
                  detail::cleared_epsilon_w2(model, w2));
    break;
  case ModelKind::Lorentz: {
    const auto &m = std::get<Lorentz>(model.variant());
    if (w2 == m.omega_t * m.omega_t)
      throw Error(ErrorKind::PoleAtFrequency,
                  "Lorentz permittivity has a pole at omega^2 = omega_t^2");
    break;
  }
  case ModelKind::NonDispersive:
    break;
  }
  return detail::epsilon_of_w2(model, w2);
}

double static_susceptibility(const DielectricModel &model) {
  switch (model.kind()) {
  case ModelKind::NonDispersive: {
    const double n = std::get<NonDispersive>(model.variant()).n;
    return n * n - 1.0;
  }
  case ModelKind::Lorentz: {
    const auto &m = std::get<Lorentz>(model.variant());
    return (m.omega_p * m.omega_p) / (m.omega_t * m.omega_t);
  }
  case ModelKind::Plasma:
    return std::numeric_limits<double>::infinity();
  default:
    throw Error(ErrorKind::UnsupportedModel,
                "static susceptibility defined for nondisp, lorentz, plasma");
  }
}

ModeBasisClass classify(const DielectricModel &model) {
  switch (model.kind()) {
  case ModelKind::Lorentz: return ModeBasisClass::ResponseOnly;
  case ModelKind::DampedDrude: return ModeBasisClass::IllDefined;
  default: return ModeBasisClass::HermitianModes;
  }
}

} // namespace selfenergy
