#include <doctest.h>

#include "selfenergy/mode_sum.hpp"
#include "selfenergy/error.hpp"

#include <cmath>
#include <limits>

using namespace selfenergy;
using namespace selfenergy::modesum;

namespace {

ModeSpec left(Polarization p, double k, double kz) {
  return {Incidence::Left, p, k, kz};
}
ModeSpec right(Polarization p, double k, double kzd) {
  return {Incidence::Right, p, k, kzd};
}

cplx dot_k(double k, cplx kz, const Vec3 &v) { return k * v[0] + kz * v[2]; }

double closed_par(double n) {
  const double e = n * n;
  return -e * (e - 1.0) / ((e + 1.0) * (e + 1.0));
}
double closed_perp(double n) {
  const double e = n * n;
  return -(2.0 * e * e - e - 1.0) / ((e + 1.0) * (e + 1.0));
}

} // namespace

TEST_CASE("polarization basis") {
  for (double k : {0.1, 1.0, 5.0})
    for (double kz : {0.2, 3.0}) {
      const double w = std::hypot(k, kz);
      for (double s : {1.0, -1.0}) {
        const Vec3 tm = PolarizationBasis::tm(k, s * kz, w);
        const Vec3 te = PolarizationBasis::te();
        CHECK(std::abs(dot_k(k, s * kz, tm)) < 1e-15);
        CHECK(std::abs(dot_k(k, s * kz, te)) < 1e-15);
        CHECK(std::norm(tm[0]) + std::norm(tm[1]) + std::norm(tm[2]) ==
              doctest::Approx(1.0).epsilon(1e-15));
        CHECK(te[2] == cplx(0.0));
      }
    }
  // evanescent continuation stays transverse
  const Vec3 tm = PolarizationBasis::tm(2.0, cplx(0.0, 1.0), std::sqrt(3.0));
  CHECK(std::abs(dot_k(2.0, cplx(0.0, 1.0), tm)) < 1e-15);
}

TEST_CASE("tangential fields are continuous across the surface") {
  const double below = -std::numeric_limits<double>::denorm_min();
  const double above = std::numeric_limits<double>::denorm_min();
  for (double n : {1.3, 2.0, 9.0})
    for (auto p : {Polarization::TE, Polarization::TM})
      for (double k : {0.3, 1.7})
        for (double q : {0.1, 1.0, 4.0}) {
          ModeSpec modes[] = {left(p, k, q), right(p, k, q * n)};
          if (modes[1].k_normal * modes[1].k_normal == (n * n - 1.0) * k * k)
            continue;
          for (const ModeSpec &m : modes) {
            const ModeField lo = mode_field(n, m, below);
            const ModeField hi = mode_field(n, m, above);
            for (int c : {0, 1}) {
              CHECK(std::abs(lo.a[c] - hi.a[c]) < 1e-12);
              CHECK(std::abs(lo.b[c] - hi.b[c]) < 1e-12);
            }
          }
        }
}

TEST_CASE("boundary intensity") {
  SUBCASE("TE has no normal component") {
    CHECK(boundary_intensity(2.0, left(Polarization::TE, 1.0, 0.7), -1.0).i_perp == 0.0);
    CHECK(boundary_intensity(2.0, right(Polarization::TE, 1.0, 0.5), -1.0).i_perp == 0.0);
  }
  SUBCASE("vanishes without a boundary") {
    const double n = 1.0 + 1e-9;
    for (auto p : {Polarization::TE, Polarization::TM}) {
      const Intensity i = boundary_intensity(n, left(p, 1.0, 0.7), -1.0);
      CHECK(std::abs(i.i_par) < 1e-8);
      CHECK(std::abs(i.i_perp) < 1e-8);
    }
    CHECK(right(Polarization::TM, 1.0, 1e-5).evanescent(n));
    CHECK_FALSE(right(Polarization::TM, 1.0, 1e-4).evanescent(n));
  }
  SUBCASE("left interference term stays bounded far from the surface") {
    for (double z : {-1.0, -1e3, -1e6}) {
      const Intensity i = boundary_intensity(2.0, left(Polarization::TM, 1.0, 0.7), z);
      CHECK(std::abs(i.i_par) <= 2.0);
      CHECK(std::abs(i.i_perp) <= 2.0);
    }
  }
  SUBCASE("travelling right modes are rejected") {
    CHECK_THROWS_AS(boundary_intensity(2.0, right(Polarization::TM, 1.0, 3.0), -1.0), Error);
    try {
      boundary_intensity(2.0, right(Polarization::TE, 1.0, 3.0), -1.0);
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::NotEvanescent);
    }
  }
  SUBCASE("evanescent decay") {
    const auto m = right(Polarization::TM, 1.0, 0.5);
    const double a = boundary_intensity(2.0, m, -1.0).i_perp;
    const double b = boundary_intensity(2.0, m, -2.0).i_perp;
    CHECK(a > b);
    CHECK(b > 0.0);
  }
}

TEST_CASE("mode sum against closed form") {
  for (double n : {1.1, 1.5, 2.0, 4.0}) {
    const ModeSumResult r = boundary_mode_sum(n, Geometry(1.0), 1e-4);
    CHECK(std::abs(r.g.g_par / closed_par(n) - 1.0) < 5e-3);
    CHECK(std::abs(r.g.g_perp / closed_perp(n) - 1.0) < 5e-3);
  }
}

TEST_CASE("mode sum scales as 1/d") {
  const auto one = boundary_mode_sum(2.0, Geometry(1.0), 1e-4).g;
  for (double d : {0.3, 4.0}) {
    const auto g = boundary_mode_sum(2.0, Geometry(d), 1e-4).g;
    CHECK(g.g_par * d == doctest::Approx(one.g_par).epsilon(1e-4));
    CHECK(g.g_perp * d == doctest::Approx(one.g_perp).epsilon(1e-4));
  }
}

TEST_CASE("inner channels and argument ranges") {
  const InnerChannels c = inner_channels(2.0, 0.8, 1.0);
  CHECK(c.left_te_par != 0.0);
  CHECK(c.right_perp > 0.0);
  CHECK_THROWS_AS(boundary_mode_sum(25.0, Geometry(1.0)), Error);
  CHECK_THROWS_AS(boundary_mode_sum(1.0, Geometry(1.0)), Error);
}
