#include "selfenergy/mode_sum.hpp"
#include "selfenergy/error.hpp"
#include "selfenergy/fresnel.hpp"
#include "selfenergy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

namespace selfenergy::modesum {

namespace {

constexpr cplx I{0.0, 1.0};

void require_index(double n) {
  if (!(n > 1.0) || !std::isfinite(n))
    throw Error(ErrorKind::InvalidArgument, "mode sum needs n > 1");
}

Vec3 scale(const Vec3 &v, cplx s) { return {v[0] * s, v[1] * s, v[2] * s}; }

Vec3 add(const Vec3 &a, const Vec3 &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// k x v for k = (k_par, 0, k_z)
Vec3 cross_k(double k_par, cplx k_z, const Vec3 &v) {
  return {-k_z * v[1], k_z * v[0] - k_par * v[2], k_par * v[1]};
}

Vec3 basis(Polarization p, double k_par, cplx k_z, double omega) {
  return p == Polarization::TE ? PolarizationBasis::te()
                               : PolarizationBasis::tm(k_par, k_z, omega);
}

// Plane wave amp * e_hat(k) e^{i k_z z}, with its k x A.
ModeField plane_wave(Polarization p, double k_par, cplx k_z, double omega,
                     cplx amp, double z) {
  const Vec3 a = scale(basis(p, k_par, k_z, omega), amp * std::exp(I * k_z * z));
  return {a, cross_k(k_par, k_z, a)};
}

ModeField sum(const ModeField &x, const ModeField &y) {
  return {add(x.a, y.a), add(x.b, y.b)};
}

DielectricModel medium(double n) { return DielectricModel::nondispersive(n); }

// Right-evanescent intensity with kappa supplied exactly.
Intensity right_evanescent(double n, Polarization p, double k_par, double K,
                           double kappa, double z) {
  const double omega2 = (K * K + k_par * k_par) / (n * n);
  const RightIncidence c = detail::right_incidence(n, K, cplx(0.0, kappa));
  const double decay = std::exp(2.0 * kappa * z);
  if (p == Polarization::TE)
    return {std::norm(c.t_te) * decay / (n * n), 0.0};
  const double t2 = std::norm(c.t_tm) * decay / (n * n);
  return {t2 * kappa * kappa / omega2, t2 * k_par * k_par / omega2};
}

} // namespace

bool ModeSpec::evanescent(double n) const {
  if (incidence != Incidence::Right)
    return false;
  return (k_normal * k_normal + k_par * k_par) / (n * n) - k_par * k_par < 0.0;
}

Vec3 PolarizationBasis::te() { return {0.0, -1.0, 0.0}; }

Vec3 PolarizationBasis::tm(double k_par, cplx k_z, double omega) {
  return {k_z / omega, 0.0, -k_par / omega};
}

ModeField mode_field(double n, const ModeSpec &mode, double z) {
  require_index(n);
  const double k = mode.k_par;
  const auto model = medium(n);
  if (mode.incidence == Incidence::Left) {
    const double kz = mode.k_normal;
    const double omega = std::hypot(k, kz);
    const cplx kzd = kz_medium(model, k, kz);
    const bool te = mode.polarization == Polarization::TE;
    const cplx r = te ? r_te(model, k, kz) : r_tm(model, k, kz);
    const cplx t = te ? 2.0 * kz / (kz + kzd)
                      : 2.0 * n * kz / (n * n * kz + kzd);
    if (z <= 0.0)
      return sum(plane_wave(mode.polarization, k, kz, omega, 1.0, z),
                 plane_wave(mode.polarization, k, -kz, omega, r, z));
    return plane_wave(mode.polarization, k, kzd, n * omega, t, z);
  }

  const double K = mode.k_normal;
  const RightIncidence c = transmission_right(model, k, K);
  const double omega = std::sqrt((K * K + k * k)) / n;
  const bool te = mode.polarization == Polarization::TE;
  if (z >= 0.0)
    return sum(plane_wave(mode.polarization, k, -K, n * omega, 1.0, z),
               plane_wave(mode.polarization, k, K, n * omega,
                          te ? c.r_te_right : c.r_tm_right, z));
  return plane_wave(mode.polarization, k, c.k_z_vacuum, omega,
                    te ? c.t_te : c.t_tm, z);
}

Intensity boundary_intensity(double n, const ModeSpec &mode, double z) {
  require_index(n);
  if (!(z < 0.0))
    throw Error(ErrorKind::InvalidArgument, "electron must sit at z < 0");
  const double k = mode.k_par;

  if (mode.incidence == Incidence::Left) {
    const double kz = mode.k_normal;
    const double omega = std::hypot(k, kz);
    const auto model = medium(n);
    const cplx r = mode.polarization == Polarization::TE ? r_te(model, k, kz)
                                                         : r_tm(model, k, kz);
    const Vec3 e_in = basis(mode.polarization, k, kz, omega);
    const Vec3 e_ref = basis(mode.polarization, k, -kz, omega);
    const cplx phase = std::exp(-2.0 * I * kz * z);
    double comp[3];
    for (int i = 0; i < 3; ++i)
      comp[i] = 2.0 * std::real(r * e_ref[i] * std::conj(e_in[i]) * phase);
    return {comp[0] + comp[1], comp[2]};
  }

  if (!mode.evanescent(n))
    throw Error(ErrorKind::NotEvanescent,
                "travelling right-incident modes belong to the free-space part");
  const double omega2 = (mode.k_normal * mode.k_normal + k * k) / (n * n);
  const double kappa = std::sqrt(k * k - omega2);
  return right_evanescent(n, mode.polarization, k, mode.k_normal, kappa, z);
}

InnerChannels inner_channels(double n, double k, double d) {
  require_index(n);
  const auto model = medium(n);
  const double z = -d;
  const double omega_osc = 2.0 * d;
  const double branch = k * std::sqrt(n * n - 1.0) / n;
  InnerChannels out;

  // Left modes: Re int_0^inf h(k_z) e^{2 i d k_z} dk_z, h = k * 2 R P / omega^2.
  struct Amp {
    double te_par, tm_par, tm_perp;
  };
  const auto amplitude = [&](double kz) -> Amp {
    const double w2 = k * k + kz * kz;
    const double rte = r_te(model, k, kz).real();
    const double rtm = r_tm(model, k, kz).real();
    return {k * 2.0 * rte / w2, -k * 2.0 * rtm * kz * kz / (w2 * w2),
            k * 2.0 * rtm * k * k / (w2 * w2)};
  };

  const double upper = std::max(40.0 / d, 20.0 * (k + branch));
  cplx acc[3] = {0.0, 0.0, 0.0};
  const auto &nodes = quadrature::FilonLegendre::nodes();
  double a = 0.0;
  while (a < upper) {
    const double b = std::min(upper, a + 0.5 * std::max(branch, a));
    const auto w = quadrature::FilonLegendre::weights(a, b, omega_osc);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Amp v = amplitude(c + h * nodes[i]);
      acc[0] += w[i] * v.te_par;
      acc[1] += w[i] * v.tm_par;
      acc[2] += w[i] * v.tm_perp;
    }
    a = b;
  }

  // Tail [upper, inf) by integration by parts, three terms.
  const double delta = 1e-3 * upper;
  const Amp f0 = amplitude(upper), fp = amplitude(upper + delta),
            fm = amplitude(upper - delta);
  const auto tail = [&](double v0, double vp, double vm) {
    const double d1 = (vp - vm) / (2.0 * delta);
    const double d2 = (vp - 2.0 * v0 + vm) / (delta * delta);
    const cplx iw = I * omega_osc;
    const cplx t0 = v0 / iw, t1 = -d1 / (iw * iw), t2 = d2 / (iw * iw * iw);
    if (std::abs(t2) > std::abs(t1) && std::abs(t1) > std::abs(t0))
      throw Error(ErrorKind::OscillatoryDivergence,
                  "asymptotic tail terms do not decrease");
    return -std::exp(iw * upper) * (t0 + t1 + t2);
  };
  acc[0] += tail(f0.te_par, fp.te_par, fm.te_par);
  acc[1] += tail(f0.tm_par, fp.tm_par, fm.tm_par);
  acc[2] += tail(f0.tm_perp, fp.tm_perp, fm.tm_perp);
  out.left_te_par = acc[0].real();
  out.left_tm_par = acc[1].real();
  out.left_tm_perp = acc[2].real();

  // Right evanescent modes, K = Gamma sin(phi), kappa = kappa_max cos(phi).
  const double gamma_max = std::sqrt(n * n - 1.0) * k;
  const double kappa_max = branch;
  const auto right = [&](double phi, bool parallel) {
    const double K = gamma_max * std::sin(phi);
    const double kappa = kappa_max * std::cos(phi);
    const double w2 = (K * K + k * k) / (n * n);
    const Intensity te = right_evanescent(n, Polarization::TE, k, K, kappa, z);
    const Intensity tm = right_evanescent(n, Polarization::TM, k, K, kappa, z);
    const double i = parallel ? te.i_par + tm.i_par : te.i_perp + tm.i_perp;
    return k * i / w2 * gamma_max * std::cos(phi);
  };
  constexpr double half_pi = 0.5 * std::numbers::pi;
  out.right_par = quadrature::integrate_finite(
                      [&](double p) { return right(p, true); }, 0.0, half_pi, 1e-12)
                      .value;
  out.right_perp = quadrature::integrate_finite(
                       [&](double p) { return right(p, false); }, 0.0, half_pi, 1e-12)
                       .value;
  return out;
}

ModeSumResult boundary_mode_sum(double n, const Geometry &geometry, double tol) {
  require_index(n);
  if (n > 20.0)
    throw Error(ErrorKind::InvalidArgument, "mode sum supports n <= 20");
  if (!(tol >= 1e-10) || !(tol <= 1e-2))
    throw Error(ErrorKind::InvalidArgument, "mode-sum tolerance outside [1e-10, 1e-2]");
  const double d = geometry.d();
  const double pre = -2.0 / std::numbers::pi;

  quadrature::Estimate est[2];
  std::exception_ptr failure[2];
  // The two components are independent; fixed slots keep the result
  // independent of scheduling.
#pragma omp parallel for num_threads(2) schedule(static)
  for (int comp = 0; comp < 2; ++comp) {
    const bool parallel = comp == 0;
    try {
      est[comp] = quadrature::integrate_decaying(
          [&](double u) {
            const InnerChannels c = inner_channels(n, u / (2.0 * d), d);
            const double v = parallel
                                 ? c.left_te_par + c.left_tm_par + c.right_par
                                 : c.left_tm_perp + c.right_perp;
            return v / (2.0 * d);
          },
          tol * 1e-2, tol * 1e-3);
    } catch (...) {
      failure[comp] = std::current_exception();
    }
  }
  for (const auto &f : failure)
    if (f)
      std::rethrow_exception(f);
  ModeSumResult out;
  out.g = {pre * est[0].value, pre * est[1].value};
  out.est_error = std::max(est[0].rel_error(), est[1].rel_error());
  if (out.est_error > tol)
    throw Error(ErrorKind::ToleranceNotMet, "mode sum error estimate above tolerance");
  return out;
}

} // namespace selfenergy::modesum
