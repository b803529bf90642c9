#include <doctest.h>

#include "selfenergy/fresnel.hpp"
#include "selfenergy/residue.hpp"

#include <cmath>
#include <limits>

using namespace selfenergy;

namespace {
const cplx I{0.0, 1.0};

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }
} // namespace

TEST_CASE("medium wavenumber branches") {
  const auto n2 = DielectricModel::nondispersive(2.0);
  CHECK(near(kz_medium(n2, 1e-4, 1.0), 2.0, 1e-8));
  CHECK(near(kz_medium(n2, 1e-4, -1.0), -2.0, 1e-8));
  CHECK(near(kz_medium(n2, 1.0, I), I, 1e-15));
  CHECK(near(kz_medium(DielectricModel::plasma(1.0), 1.0, I), I * std::sqrt(2.0), 1e-15));
  // below the plasma frequency the medium wave decays
  const cplx kzd = kz_medium(DielectricModel::plasma(2.0), 0.5, 1.0);
  CHECK(kzd.imag() > 0.0);
  CHECK(std::abs(kzd.real()) < 1e-15);
}

TEST_CASE("reflection coefficients at reference points") {
  const auto n2 = DielectricModel::nondispersive(2.0);
  CHECK(near(r_te(n2, 1.0, I), 0.0, 1e-15));
  CHECK(near(r_tm(n2, 1.0, I), 0.6, 1e-15));
  CHECK(near(r_te(n2, 1e-6, 1.0), -1.0 / 3.0, 1e-10));
  CHECK(near(r_tm(n2, 1e-6, 1.0), 1.0 / 3.0, 1e-10));
  // large index approaches the ideal conductor
  const auto big = DielectricModel::nondispersive(1e6);
  CHECK(near(r_te(big, 0.3, 0.8), -1.0, 1e-5));
  CHECK(near(r_tm(big, 0.3, 0.8), 1.0, 1e-5));
  CHECK_THROWS_AS(r_te(DielectricModel::perfect_mirror(), 1.0, 1.0), Error);
}

TEST_CASE("energy bound on the propagating axis") {
  for (double n : {1.01, 1.5, 3.0, 40.0})
    for (double theta = 0.01; theta < 1.57; theta += 0.07) {
      const auto m = DielectricModel::nondispersive(n);
      const double k = std::sin(theta), kz = std::cos(theta);
      CHECK(std::abs(r_te(m, k, kz)) <= 1.0 + 1e-15);
      CHECK(std::abs(r_tm(m, k, kz)) <= 1.0 + 1e-15);
    }
}

TEST_CASE("plasma at the residue point") {
  for (double wp : {0.3, 1.0, 4.0}) {
    const auto m = DielectricModel::plasma(wp);
    const double k = 0.7;
    const double big_k = std::hypot(k, wp);
    const ResidueData r = residue_data(m, k);
    CHECK(near(r.r_tm, 1.0, 1e-14));
    CHECK(near(r.r_te, (k - big_k) / (k + big_k), 1e-14));
    CHECK(near(r.dr_tm_dkz, 4.0 * I * big_k / (wp * wp), 1e-13));
  }
}

TEST_CASE("plasma derivative ratio at large plasma frequency") {
  const double k = 1.3;
  for (double wp : {1e2, 1e4, 1e6}) {
    const ResidueData r = residue_data(DielectricModel::plasma(wp), k);
    const cplx ratio = r.dr_tm_dkz * wp * wp / (4.0 * I) / std::hypot(k, wp);
    // the cleared form cancels terms of size omega_p^2 against k_par omega_p
    CHECK(near(ratio, 1.0, 64.0 * std::numeric_limits<double>::epsilon() * wp / k));
  }
  CHECK(std::abs(residue_data(DielectricModel::plasma(1e6), k).dr_tm_dkz) < 1e-5);
}

TEST_CASE("residue data for the mirror and the TE discontinuity") {
  const ResidueData pm = residue_data(DielectricModel::perfect_mirror(), 2.0);
  CHECK(pm.r_te == cplx(-1.0));
  CHECK(pm.r_tm == cplx(1.0));
  CHECK(pm.dr_tm_dkz == cplx(0.0));
  for (double n : {1.5, 10.0, 1e3, 1e6})
    CHECK(std::abs(residue_data(DielectricModel::nondispersive(n), 2.0).r_te) < 1e-15);
  CHECK_THROWS_AS(residue_data(DielectricModel::damped_drude(1.0, 0.1), 1.0), Error);
}

TEST_CASE("dual derivative matches central differences along real k_z") {
  const DielectricModel models[] = {DielectricModel::nondispersive(1.5),
                                    DielectricModel::nondispersive(7.0),
                                    DielectricModel::lorentz(1.0, 0.3),
                                    DielectricModel::lorentz(5.0, 2.0)};
  for (const auto &m : models)
    for (double k : {0.05, 0.8, 12.0}) {
      const double h = 1e-6 * k;
      const cplx fd = (r_tm(m, k, I * k + h) - r_tm(m, k, I * k - h)) / (2.0 * h);
      const cplx dual = residue_data(m, k).dr_tm_dkz;
      CHECK(std::abs(dual - fd) <= 1e-6 * std::abs(dual));
    }
}

TEST_CASE("non-dispersive derivative against its hand form") {
  for (double n : {1.2, 2.0, 30.0})
    for (double k : {0.01, 1.0, 100.0}) {
      const double e = n * n;
      const cplx expect = 2.0 * I * e * (e - 1.0) / ((e + 1.0) * (e + 1.0) * k);
      CHECK(near(residue_data(DielectricModel::nondispersive(n), k).dr_tm_dkz, expect,
                 1e-13));
    }
}

TEST_CASE("right incidence") {
  const auto n2 = DielectricModel::nondispersive(2.0);
  SUBCASE("normal incidence") {
    const RightIncidence c = transmission_right(n2, 1e-7, 2.0);
    CHECK(near(c.r_te_right, 1.0 / 3.0, 1e-10));
    CHECK_FALSE(c.evanescent);
  }
  SUBCASE("weak contrast") {
    const RightIncidence c =
        transmission_right(DielectricModel::nondispersive(1.0 + 1e-9), 0.4, 0.9);
    CHECK(near(c.t_te, 1.0, 1e-8));
    CHECK(near(c.t_tm, 1.0, 1e-8));
    CHECK(std::abs(c.r_te_right) < 1e-8);
    CHECK(std::abs(c.r_tm_right) < 1e-8);
  }
  SUBCASE("evanescent window") {
    const double k = 1.0, gamma = std::sqrt(3.0) * k;
    const RightIncidence c = transmission_right(n2, k, 0.5 * gamma);
    CHECK(c.evanescent);
    CHECK(c.k_z_vacuum.real() == 0.0);
    // transmitted wave e^{i k_z z} decays toward z -> -inf
    CHECK(c.k_z_vacuum.imag() < 0.0);
    CHECK(std::abs(std::exp(I * c.k_z_vacuum * -3.0)) < 1.0);
    // total internal reflection
    CHECK(std::abs(c.r_te_right) == doctest::Approx(1.0));
    CHECK(std::abs(c.r_tm_right) == doctest::Approx(1.0));
  }
  SUBCASE("critical angle") {
    // n^2 = 1.5625 and k_par = 1 put the critical k_z^d at exactly 0.75
    CHECK_THROWS_AS(transmission_right(DielectricModel::nondispersive(1.25), 1.0, 0.75), Error);
  }
  SUBCASE("flux balance for travelling waves") {
    const double k = 0.5, K = 1.7;
    const RightIncidence c = transmission_right(n2, k, K);
    CHECK(c.k_z_vacuum.real() < 0.0);
    const double q = -c.k_z_vacuum.real();
    CHECK(std::norm(c.r_te_right) + std::norm(c.t_te) * q / K == doctest::Approx(1.0));
    CHECK(std::norm(c.r_tm_right) + std::norm(c.t_tm) * q / K ==
          doctest::Approx(1.0));
  }
}
