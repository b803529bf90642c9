#include "selfenergy/quadrature.hpp"
#include "selfenergy/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace selfenergy::quadrature {

double Estimate::rel_error() const {
  return value == 0.0 ? abs_error : abs_error / std::abs(value);
}

Estimate integrate_finite(const std::function<double(double)> &f, double a,
                          double b, double tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  Estimate e;
  double l1 = 0.0;
  e.value = GK::integrate(f, a, b, 25, tol, &e.abs_error, &l1);
  return e;
}

Estimate integrate_decaying(const std::function<double(double)> &f, double tol,
                            double cut_fraction) {
  // Scan 1/8, 1/4, ... for the peak and the point where |f| has fallen
  // below cut_fraction * peak on two consecutive samples.
  constexpr int max_doublings = 24;
  double peak = 0.0;
  double upper = 0.0;
  bool prev_small = false;
  for (int j = 0; j <= max_doublings; ++j) {
    const double u = 0.125 * std::ldexp(1.0, j);
    const double v = std::abs(f(u));
    if (!std::isfinite(v))
      continue;
    peak = std::max(peak, v);
    const bool small = v <= cut_fraction * peak;
    if (u >= 4.0 && small && prev_small) {
      upper = u;
      break;
    }
    prev_small = small;
  }
  if (upper == 0.0) {
    if (peak == 0.0)
      return {};
    throw Error(ErrorKind::ToleranceNotMet,
                "integrand does not decay on [0, 2^21]");
  }

  Estimate e = integrate_finite(f, 0.0, upper, tol);
  for (double t = tol * 1e-2; e.abs_error > tol * std::abs(e.value) && t > 1e-15;
       t *= 1e-2)
    e = integrate_finite(f, 0.0, upper, t);
  if (!std::isfinite(e.value) || e.abs_error > tol * std::abs(e.value))
    throw Error(ErrorKind::ToleranceNotMet,
                "relative error estimate " + std::to_string(e.rel_error()) +
                    " exceeds tolerance " + std::to_string(tol));
  return e;
}

namespace {

struct LegendreTable {
  std::array<double, FilonLegendre::order> nodes{};
  std::array<double, FilonLegendre::order> weights{};
  // (2l+1) w_i P_l(s_i), indexed [l][i]
  std::array<std::array<double, FilonLegendre::order>, FilonLegendre::order>
      projector{};

  LegendreTable() {
    using G = boost::math::quadrature::gauss<double, FilonLegendre::order>;
    const auto &x = G::abscissa();
    const auto &w = G::weights();
    constexpr std::size_t half = FilonLegendre::order / 2;
    for (std::size_t i = 0; i < half; ++i) {
      nodes[half - 1 - i] = -x[i];
      weights[half - 1 - i] = w[i];
      nodes[half + i] = x[i];
      weights[half + i] = w[i];
    }
    for (std::size_t l = 0; l < FilonLegendre::order; ++l)
      for (std::size_t i = 0; i < FilonLegendre::order; ++i)
        projector[l][i] = (2.0 * l + 1.0) * weights[i] *
                          std::legendre(static_cast<unsigned>(l), nodes[i]);
  }
};

const LegendreTable &table() {
  static const LegendreTable t;
  return t;
}

} // namespace

const std::array<double, FilonLegendre::order> &FilonLegendre::nodes() {
  return table().nodes;
}

std::array<std::complex<double>, FilonLegendre::order>
FilonLegendre::weights(double a, double b, double omega) {
  const auto &t = table();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double theta = omega * h;
  const double sign = theta < 0.0 ? -1.0 : 1.0;

  // i^l j_l(theta)
  std::array<std::complex<double>, order> moment{};
  static constexpr std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t l = 0; l < order; ++l) {
    const double jl = boost::math::sph_bessel(static_cast<unsigned>(l), std::abs(theta)) *
                      ((l % 2 == 1) ? sign : 1.0);
    moment[l] = ipow[l % 4] * jl;
  }

  const std::complex<double> phase = h * std::exp(std::complex<double>(0.0, omega * c));
  std::array<std::complex<double>, order> w{};
  for (std::size_t i = 0; i < order; ++i) {
    std::complex<double> acc = 0.0;
    for (std::size_t l = 0; l < order; ++l)
      acc += t.projector[l][i] * moment[l];
    w[i] = phase * acc;
  }
  return w;
}

} // namespace selfenergy::quadrature
