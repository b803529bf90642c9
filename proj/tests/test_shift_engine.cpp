#include <doctest.h>

#include "selfenergy/shift_engine.hpp"

#include <cmath>
#include <numbers>

using namespace selfenergy;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Composite Simpson on [0, L], enough for smooth e^{-2k d} integrands.
template <class F> double simpson(F f, double L, int n = 200000) {
  const double h = L / n;
  double s = f(0.0) + f(L);
  for (int i = 1; i < n; ++i)
    s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

} // namespace

TEST_CASE("mirror closed form") {
  CHECK(pm_closed(Geometry(1.0)).g_par == 1.0);
  CHECK(pm_closed(Geometry(1.0)).g_perp == -1.0);
  CHECK(pm_closed(Geometry(2.0)).g_par == 0.5);
  CHECK(pm_closed(Geometry(2.0)).g_perp == -0.5);
  CHECK(std::abs(pm_closed(Geometry(1e12)).g_par) < 1e-11);
  CHECK_THROWS_AS(Geometry(0.0), Error);
  CHECK_THROWS_AS(Geometry(-1.0), Error);
}

TEST_CASE("non-dispersive closed form") {
  const auto g = nondisp_closed(2.0, Geometry(1.0));
  CHECK(g.g_par == doctest::Approx(-0.48).epsilon(1e-14));
  CHECK(g.g_perp == doctest::Approx(-1.08).epsilon(1e-14));
  const auto weak = nondisp_closed(1.0 + 1e-8, Geometry(1.0));
  CHECK(std::abs(weak.g_par) < 1e-7);
  CHECK(std::abs(weak.g_perp) < 1e-7);
  const auto strong = nondisp_closed(1e5, Geometry(1.0));
  CHECK(strong.g_par == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(strong.g_perp == doctest::Approx(-2.0).epsilon(1e-8));
}

TEST_CASE("Lorentz closed form") {
  const auto g = lorentz_closed(1.0, 1.0, Geometry(1.0));
  CHECK(g.g_par == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(g.g_perp == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  const auto tiny = lorentz_closed(1e-6, 1.0, Geometry(1.0));
  CHECK(std::abs(tiny.g_par) < 1e-11);
  CHECK(std::abs(tiny.g_perp) < 1e-11);
  CHECK(lorentz_perp_chi(1.0, 1.0, Geometry(1.0)) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(lorentz_perp_chi(1e-9, 0.3, Geometry(1.0))) < 1e-8);
  CHECK(lorentz_perp_chi(1e9, 0.3, Geometry(1.0)) == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("quadrature reproduces closed forms") {
  for (double d : {0.1, 1.0, 7.0}) {
    const Geometry g(d);
    const auto q = geometry_factors_quadrature(DielectricModel::perfect_mirror(), g);
    CHECK(rel(q.g.g_par, 1.0 / d) < 1e-9);
    CHECK(rel(q.g.g_perp, -1.0 / d) < 1e-9);
    for (double n : {1.05, 2.0, 25.0}) {
      const auto qn = geometry_factors_quadrature(DielectricModel::nondispersive(n), g);
      const auto cn = nondisp_closed(n, g);
      CHECK(rel(qn.g.g_par, cn.g_par) < 1e-9);
      CHECK(rel(qn.g.g_perp, cn.g_perp) < 1e-9);
    }
  }
  // 10 x 10 Lorentz grid
  const Geometry unit(1.0);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double wp = 0.05 * std::pow(400.0, i / 9.0);
      const double wt = 0.05 * std::pow(400.0, j / 9.0);
      const auto q = geometry_factors_quadrature(DielectricModel::lorentz(wp, wt), unit);
      const auto c = lorentz_closed(wp, wt, unit);
      CHECK(rel(q.g.g_par, c.g_par) < 1e-8);
      CHECK(rel(q.g.g_perp, c.g_perp) < 1e-8);
    }
}

TEST_CASE("plasma corrections") {
  const Geometry unit(1.0);
  const PlasmaDelta delta = plasma_delta(1.0, unit);
  // independent Simpson oracle for both integrals
  const double i_perp =
      simpson([](double k) { return k * std::hypot(k, 1.0) * std::exp(-2.0 * k); }, 40.0);
  const double i_par = simpson(
      [](double k) { return k * (std::hypot(k, 1.0) - 0.5 * k) * std::exp(-2.0 * k); }, 40.0);
  CHECK(rel(delta.d_perp, -4.0 * i_perp) < 1e-10);
  CHECK(rel(delta.d_par, -8.0 * i_par) < 1e-10);
  CHECK(rel(delta.d_perp, -1.48) < 0.01);
  CHECK(delta.d_perp == doctest::Approx(-1.4869565901351174).epsilon(1e-9));

  for (double wp : {1e-3, 0.1, 1.0, 30.0})
    for (double d : {0.2, 3.0})
      CHECK(plasma_delta(wp, Geometry(d)).d_perp < 0.0);

  const auto far = plasma_factors(1e6, unit);
  CHECK(far.g.g_par == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(far.g.g_perp == doctest::Approx(-1.0).epsilon(1e-5));

  const auto composed = plasma_factors(1.0, unit);
  CHECK(composed.g.g_par == doctest::Approx(1.0 + delta.d_par).epsilon(1e-15));
  CHECK(composed.g.g_perp == doctest::Approx(-1.0 + delta.d_perp).epsilon(1e-15));

  for (double wp : {0.1, 1.0, 12.0, 50.0}) {
    const auto q = geometry_factors_quadrature(DielectricModel::plasma(wp), unit);
    const auto c = plasma_factors(wp, unit);
    CHECK(rel(q.g.g_par, c.g.g_par) < 1e-6);
    CHECK(rel(q.g.g_perp, c.g.g_perp) < 1e-6);
  }
}

TEST_CASE("scaling law") {
  const DielectricModel models[] = {DielectricModel::perfect_mirror(),
                                    DielectricModel::plasma(0.8),
                                    DielectricModel::lorentz(1.2, 0.3)};
  for (const auto &m : models)
    for (double s : {0.5, 2.0, 10.0}) {
      const auto base = geometry_factors_quadrature(m, Geometry(1.5)).g;
      const auto scaled = geometry_factors_quadrature(m.scaled(s), Geometry(1.5 / s)).g;
      CHECK(rel(scaled.g_par, s * base.g_par) < 1e-9);
      CHECK(rel(scaled.g_perp, s * base.g_perp) < 1e-9);
    }
}

TEST_CASE("non-dispersive ratios") {
  double prev = 0.0;
  for (double n = 1.05; n < 1e4; n *= 1.5) {
    const auto r = energy_shift(DielectricModel::nondispersive(n), Geometry(1.0), {1, 1}, {});
    CHECK(r.ratio_perp > prev);
    CHECK(r.ratio_perp < 2.0);
    prev = r.ratio_perp;
  }
  const auto r = energy_shift(DielectricModel::nondispersive(1e6), Geometry(1.0), {1, 1}, {});
  CHECK(r.ratio_par == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("energy assembly") {
  constexpr double pi = std::numbers::pi;
  const Geometry unit(1.0);
  const auto pm = energy_shift(DielectricModel::perfect_mirror(), unit, {0.0, 1.0}, {1.0, 1.0});
  CHECK(pm.delta_e == doctest::Approx(-1.0 / (16.0 * pi)).epsilon(1e-15));
  CHECK(pm.method == Method::ClosedForm);
  const auto nd = energy_shift(DielectricModel::nondispersive(2.0), unit, {1.0, 0.0}, {1.0, 1.0});
  CHECK(nd.delta_e == doctest::Approx(-0.48 / (32.0 * pi)).epsilon(1e-14));
  for (const auto &m : {DielectricModel::plasma(2.0), DielectricModel::lorentz(1.0, 0.5)})
    CHECK(energy_shift(m, unit, {0.0, 0.0}, {}).delta_e == 0.0);
  const auto scaled = energy_shift(DielectricModel::perfect_mirror(), unit, {0.0, 1.0}, {4.0, 2.0});
  CHECK(scaled.delta_e == doctest::Approx(-1.0 / (16.0 * pi)).epsilon(1e-15));
  CHECK(energy_shift(DielectricModel::plasma(1.0), unit, {1, 1}, {}).method ==
        Method::PMPlusCorrections);
  CHECK(energy_shift(DielectricModel::plasma(1.0), unit, {1, 1}, {}, 1e-10,
                     MethodRequest::Quadrature)
            .method == Method::Quadrature);
}

TEST_CASE("argument and model rejection") {
  const Geometry unit(1.0);
  CHECK_THROWS_AS(energy_shift(DielectricModel::perfect_mirror(), unit, {-1, 1}, {}), Error);
  CHECK_THROWS_AS(energy_shift(DielectricModel::perfect_mirror(), unit, {1, 1}, {0.0, 1.0}),
                  Error);
  CHECK_THROWS_AS(geometry_factors_quadrature(DielectricModel::plasma(1.0), unit, 0.0), Error);
  CHECK_THROWS_AS(geometry_factors_quadrature(DielectricModel::plasma(1.0), unit, 1e-2), Error);
  const auto dd = DielectricModel::damped_drude(1.0, 0.1);
  try {
    energy_shift(dd, unit, {1, 1}, {});
    FAIL("damped Drude produced a value");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::IllDefinedModel);
    CHECK(std::string(e.what()).find("branch points") != std::string::npos);
  }
}
