#pragma once

#include "selfenergy/error.hpp"

#include <complex>
#include <string>
#include <type_traits>
#include <variant>

namespace selfenergy {

using cplx = std::complex<double>;

//==============================================================================
// Surface models. All frequencies/wavenumbers in one inverse-length unit
// (hbar = c = eps0 = 1).

struct PerfectMirror {};
struct NonDispersive {
  double n;
};
struct Plasma {
  double omega_p;
};
struct Lorentz {
  double omega_p;
  double omega_t;
};
struct DampedDrude {
  double omega_p;
  double gamma;
};

enum class ModelKind { PerfectMirror, NonDispersive, Plasma, Lorentz, DampedDrude };

enum class ModeBasisClass { HermitianModes, ResponseOnly, IllDefined };

/// Immutable tagged union of surface models. Construct only through the
/// named factories, which enforce parameter ranges.
class DielectricModel {
public:
  using Variant =
      std::variant<PerfectMirror, NonDispersive, Plasma, Lorentz, DampedDrude>;

  static DielectricModel perfect_mirror();
  static DielectricModel nondispersive(double n);
  static DielectricModel plasma(double omega_p);
  static DielectricModel lorentz(double omega_p, double omega_t);
  static DielectricModel damped_drude(double omega_p, double gamma);

  ModelKind kind() const noexcept {
    return static_cast<ModelKind>(m_model.index());
  }
  const Variant &variant() const noexcept { return m_model; }

  /// Short CLI name: mirror, nondisp, plasma, lorentz, damped_drude.
  std::string name() const;
  /// "key=value;key=value" parameter listing (empty for the mirror).
  std::string params_string() const;

  /// Same model with every frequency multiplied by s (n unchanged).
  DielectricModel scaled(double s) const;

private:
  explicit DielectricModel(Variant v) : m_model(v) {}
  Variant m_model;
};

std::string to_string(ModelKind kind);
std::string to_string(ModeBasisClass c);

cplx epsilon_at_omega(const DielectricModel &model, cplx omega);

/// Permittivity continued to complex k_z via omega^2 = k_z^2 + k_par^2.
cplx epsilon_at_kz(const DielectricModel &model, double k_par, cplx k_z);

/// chi(0) = eps(0) - 1. Returns +infinity for Plasma.
double static_susceptibility(const DielectricModel &model);

ModeBasisClass classify(const DielectricModel &model);

namespace detail {

// eps as a function of w2 = omega^2. Works for any field-like scalar T
// (complex, dual); DampedDrude is not a function of w2 alone and is only
// available on the principal branch of sqrt(w2) for plain complex values.
template <class T>
T epsilon_of_w2(const DielectricModel &model, const T &w2) {
  struct Visitor {
    const T &w2;
    T operator()(const NonDispersive &m) const { return T(m.n * m.n); }
    T operator()(const Plasma &m) const {
      return T(1.0) - T(m.omega_p * m.omega_p) / w2;
    }
    T operator()(const Lorentz &m) const {
      return T(1.0) - T(m.omega_p * m.omega_p) / (w2 - T(m.omega_t * m.omega_t));
    }
    T operator()(const DampedDrude &m) const {
      if constexpr (std::is_same_v<T, std::complex<double>>) {
        const T omega = std::sqrt(w2);
        return T(1.0) - m.omega_p * m.omega_p /
                            (omega * (omega + T(0.0, m.gamma)));
      } else {
        throw Error(ErrorKind::IllDefinedModel,
                    "damped Drude permittivity is not analytic in omega^2");
      }
    }
    T operator()(const PerfectMirror &) const {
      throw Error(ErrorKind::UnsupportedModel,
                  "perfect mirror has no finite permittivity");
    }
  };
  return std::visit(Visitor{w2}, model.variant());
}

// eps * w2, which is polynomial in w2 for the plasma (pole cleared).
template <class T>
T cleared_epsilon_w2(const DielectricModel &model, const T &w2) {
  if (const auto *p = std::get_if<Plasma>(&model.variant()))
    return w2 - T(p->omega_p * p->omega_p);
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    if (const auto *p = std::get_if<DampedDrude>(&model.variant())) {
      const T omega = std::sqrt(w2);
      return w2 - p->omega_p * p->omega_p * omega / (omega + T(0.0, p->gamma));
    }
  }
  return epsilon_of_w2(model, w2) * w2;
}

} // namespace detail

} // namespace selfenergy
