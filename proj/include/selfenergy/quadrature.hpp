#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace selfenergy::quadrature {

struct Estimate {
  double value = 0.0;
  double abs_error = 0.0;

  double rel_error() const;
};

/// Integrate f over [0, inf) for integrands that decay at least like a
/// power times e^{-c u}. The upper limit is cut where |f| drops below
/// cut_fraction * peak (scanned on a doubling grid), then [0, U] is
/// handled by adaptive Gauss-Kronrod. Throws ToleranceNotMet when the
/// relative error estimate exceeds tol or the integrand never decays.
Estimate integrate_decaying(const std::function<double(double)> &f, double tol,
                            double cut_fraction);

/// Adaptive Gauss-Kronrod on a finite interval (no tolerance check).
Estimate integrate_finite(const std::function<double(double)> &f, double a,
                          double b, double tol);

/// Panel rule for  int_a^b f(x) e^{i omega x} dx  with f smooth: f is
/// expanded in Legendre polynomials on the Gauss nodes and the moments are
/// exact, 2 i^l j_l(omega h). Accuracy depends on f only, not on omega.
class FilonLegendre {
public:
  static constexpr std::size_t order = 16;

  /// Nodes on [-1, 1].
  static const std::array<double, order> &nodes();

  /// Complex weights w_i so that sum_i w_i f(x_i) approximates the
  /// integral over [a, b], with x_i = c + h s_i.
  static std::array<std::complex<double>, order> weights(double a, double b,
                                                         double omega);
};

} // namespace selfenergy::quadrature
