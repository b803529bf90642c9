#include <doctest.h>

#include "selfenergy/config.hpp"
#include "selfenergy/format.hpp"
#include "selfenergy/report.hpp"
#include "selfenergy/sweep.hpp"

#include <cmath>

using namespace selfenergy;

TEST_CASE("key=value parsing") {
  const KeyValues kv = parse_key_values("model=lorentz omega-p=1.0\n# comment\nomega_t=0.2 # tail\n");
  CHECK(kv.at("model") == "lorentz");
  CHECK(kv.at("omega_p") == "1.0");
  CHECK(kv.at("omega_t") == "0.2");
  CHECK_THROWS_AS(parse_key_values("colour=blue"), Error);
  CHECK_THROWS_AS(parse_key_values("model"), Error);

  const KeyValues merged = merge(kv, {{"omega_t", "0.4"}});
  CHECK(merged.at("omega_t") == "0.4");
  CHECK(merged.at("omega_p") == "1.0");
}

TEST_CASE("run configuration") {
  const RunConfig cfg = to_run_config(parse_key_values("model=nondisp n=2 d=3 tol=1e-8"));
  REQUIRE(cfg.model.has_value());
  CHECK(cfg.model->kind() == ModelKind::NonDispersive);
  CHECK(cfg.d == 3.0);
  CHECK(cfg.tol == 1e-8);
  CHECK_THROWS_AS(to_run_config(parse_key_values("model=plasma")), Error);
  CHECK_THROWS_AS(to_run_config(parse_key_values("model=slab n=2")), Error);
  CHECK_THROWS_AS(to_run_config(parse_key_values("model=mirror tol=1e-2")), Error);
  CHECK_THROWS_AS(to_run_config(parse_key_values("model=mirror d=-1")), Error);
  CHECK_THROWS_AS(to_run_config(parse_key_values("model=mirror d=abc")), Error);
  CHECK(parse_model("model=lorentz omega_p=1.0 omega_t=0.2").kind() == ModelKind::Lorentz);
}

TEST_CASE("grid parsing") {
  const auto lin = sweep::parse_grid("1:3:3").points();
  CHECK(lin == std::vector<double>{1.0, 2.0, 3.0});
  const auto lg = sweep::parse_grid("0.01:100:5:log").points();
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 0.01);
  CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lg.back() == 100.0);
  CHECK_THROWS_AS(sweep::parse_grid("1:3"), Error);
  CHECK_THROWS_AS(sweep::parse_grid("3:1:4"), Error);
  CHECK_THROWS_AS(sweep::parse_grid("0:1:4:log"), Error);
  CHECK_THROWS_AS(sweep::parse_grid("1:2:x"), Error);
  CHECK_THROWS_AS(sweep::parse_grid("1:2:3:cubic"), Error);
}

TEST_CASE("float formatting round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.48) == "-0.48");
  CHECK(format_double(1e-300) == "1e-300");
  const double x = 4.0 / 3.0;
  CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("serial and parallel kernels agree exactly") {
  const sweep::ShiftSpec spec{DielectricModel::plasma(1.0), Geometry(1.0), {1.0, 1.0}, {}};
  const auto xs = sweep::parse_grid("0.1:20:33:log").points();
  const auto a = sweep::shifts_serial(spec, sweep::Parameter::D, xs);
  const auto b = sweep::shifts_parallel(spec, sweep::Parameter::D, xs);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].g.g_par == b[i].g.g_par);
    CHECK(a[i].g.g_perp == b[i].g.g_perp);
    CHECK(a[i].delta_e == b[i].delta_e);
  }
  const auto chi = sweep::parse_grid("0.01:1e6:41:log").points();
  CHECK(report::figure1_csv(0.2, chi, report::Kernel::Serial) ==
        report::figure1_csv(0.2, chi, report::Kernel::Parallel));
  const auto wpd = sweep::parse_grid("0.05:1000:25:log").points();
  CHECK(report::figure2_csv(wpd, 1e-10, report::Kernel::Serial) ==
        report::figure2_csv(wpd, 1e-10, report::Kernel::Parallel));
}

TEST_CASE("sweep parameter substitution") {
  const sweep::ShiftSpec spec{DielectricModel::lorentz(1.0, 0.5), Geometry(2.0), {1, 1}, {}};
  const auto p = sweep::apply_parameter(spec, sweep::Parameter::OmegaT, 0.7);
  CHECK(std::get<Lorentz>(p.model.variant()).omega_t == 0.7);
  CHECK(std::get<Lorentz>(p.model.variant()).omega_p == 1.0);
  CHECK(p.geometry.d() == 2.0);
  CHECK_THROWS_AS(sweep::apply_parameter(spec, sweep::Parameter::N, 2.0), Error);
  CHECK_THROWS_AS(sweep::apply_parameter(spec, sweep::Parameter::OmegaT, -1.0), Error);
  CHECK(sweep::parse_parameter("omega-p") == sweep::Parameter::OmegaP);
  CHECK_THROWS_AS(sweep::parse_parameter("z"), Error);
}

TEST_CASE("a failing sweep point surfaces as the library error") {
  const sweep::ShiftSpec spec{DielectricModel::damped_drude(1.0, 0.1), Geometry(1.0), {1, 1}, {}};
  try {
    sweep::shifts_parallel(spec, sweep::Parameter::D, {1.0, 2.0, 3.0});
    FAIL("expected rejection");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::IllDefinedModel);
  }
}
