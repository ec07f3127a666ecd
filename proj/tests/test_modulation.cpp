#include "doctest.h"

#include <cmath>
#include <limits>

#include "rabiqpt/error.hpp"
#include "rabiqpt/modulation.hpp"

using namespace rabiqpt;

namespace {

// Independent evaluation of g J0(xi) / omega_c~ from the standard library.
double ratio_oracle(double v, double xi, int m0) {
  const double delta_m0 = 2.0 + m0 * v;
  return 0.05 * std::cyl_bessel_j(0.0, xi) / (0.5 * delta_m0);
}

}  // namespace

TEST_SUITE("modulation") {
  TEST_CASE("sideband selection for the three modulation frequencies") {
    CHECK(select_m0(ModelParams::resonant(0, 0.18)) == -11);
    CHECK(select_m0(ModelParams::resonant(0, 0.33)) == -6);
    CHECK(select_m0(ModelParams::resonant(0, 0.49)) == -4);
    CHECK(select_m0(ModelParams::resonant(0, 5.0)) == 0);
    CHECK(select_m0(ModelParams::resonant(0, 0.33).with_delta(0.02)) == -6);
  }

  TEST_CASE("selected sideband minimizes the detuning") {
    for (double v = 0.05; v < 3.0; v += 0.0137) {
      const auto p = ModelParams(1.0 + 0.3 * std::sin(17 * v), 1.0, 0.05, 0.0, v);
      const int m0 = select_m0(p);
      const double best = std::abs(sideband_detuning(p, m0));
      for (int m = m0 - 3; m <= m0 + 3; ++m) {
        CHECK(best <= std::abs(sideband_detuning(p, m)) + 1e-12);
      }
    }
  }

  TEST_CASE("equidistant sidebands resolve to the smaller |m|") {
    const ModelParams p(0.5, 1.0, 0.05, 0.0, 1.0);  // -(omega0 + omega_c) / v = -1.5
    const auto c = select_sideband(p);
    CHECK(c.m0 == -1);
    CHECK(c.tie);
    CHECK_FALSE(select_sideband(ModelParams::resonant(0, 0.33)).tie);
    CHECK(effective_params(p).tie);
  }

  TEST_CASE("effective parameter identities") {
    for (double v : {0.18, 0.33, 0.49}) {
      for (double delta : {-0.03, 0.0, 0.02}) {
        for (double xi : {0.0, 1.1, 2.48, 3.0}) {
          const auto p = ModelParams::resonant(xi, v).with_delta(delta);
          const auto e = effective_params(p);
          const double eps = 8 * std::numeric_limits<double>::epsilon();
          CHECK(e.delta_eff == p.delta());
          CHECK(std::abs(e.omega0_eff - e.omega_c_eff - p.delta()) <= eps);
          CHECK(std::abs(e.omega0_eff + e.omega_c_eff - e.delta_m0) <= eps);
          CHECK(e.g_r == doctest::Approx(0.05 * std::cyl_bessel_j(0.0, xi)).epsilon(1e-12));
          const double jm = std::cyl_bessel_j(static_cast<double>(-e.m0), xi) *
                            ((e.m0 % 2 == 0) ? 1.0 : -1.0);
          CHECK(std::abs(e.g_c - 0.05 * jm) <= 1e-12 * std::abs(0.05 * jm) + 1e-17);
        }
      }
    }
  }

  TEST_CASE("ratio endpoints at xi = 0 and xi = 3") {
    CHECK(effective_params(ModelParams::resonant(0, 0.18)).gr_over_omega_c_eff() ==
          doctest::Approx(5.0).epsilon(1e-9));
    CHECK(effective_params(ModelParams::resonant(0, 0.33)).gr_over_omega_c_eff() ==
          doctest::Approx(5.0).epsilon(1e-9));
    CHECK(effective_params(ModelParams::resonant(0, 0.49)).gr_over_omega_c_eff() ==
          doctest::Approx(2.5).epsilon(1e-9));
    const struct {
      double v;
      int m0;
      double frozen;
    } rows[] = {{0.18, -11, -1.30026}, {0.33, -6, -1.30026}, {0.49, -4, -0.650130}};
    for (const auto& r : rows) {
      const double got = effective_params(ModelParams::resonant(3.0, r.v)).gr_over_omega_c_eff();
      CHECK(got == doctest::Approx(ratio_oracle(r.v, 3.0, r.m0)).epsilon(1e-11));
      CHECK(std::abs(got - r.frozen) <= 1e-5);
    }
  }

  TEST_CASE("zero coupling gives zero couplings everywhere") {
    for (double xi : {0.0, 1.0, 2.48}) {
      const auto e = effective_params(ModelParams::resonant(xi, 0.33, 0.0));
      CHECK(e.g_r == 0.0);
      CHECK(e.g_c == 0.0);
      CHECK(e.gr_over_omega_c_eff() == 0.0);
      CHECK(e.gc_over_delta_m0() == 0.0);
    }
  }

  TEST_CASE("zero point") {
    CHECK(zero_point(ModelParams::resonant(0, 0.33)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(zero_point(1.0, 1.0, -6) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(zero_point(1.0, 1.0, 0), M0Zero);
    CHECK_THROWS_AS(zero_point(ModelParams::resonant(0, 5.0)), M0Zero);

    // omega_c~ vanishes at the zero point. v = 1/4 is exact in binary.
    const auto exact = effective_params(ModelParams::resonant(0, 0.25));
    CHECK(exact.m0 == -8);
    CHECK(exact.omega_c_eff == 0.0);
    CHECK(exact.delta_m0 == 0.0);
    const auto p = ModelParams::resonant(0, zero_point(1.0, 1.0, -6));
    CHECK(std::abs(effective_params(p).omega_c_eff) <= 1e-15);
  }

  TEST_CASE("rwa report") {
    const auto r = rwa_report(ModelParams::resonant(0, 0.33));
    CHECK(r.v_over_delta.skipped);
    CHECK(r.v_over_delta_m0.ratio == doctest::Approx(16.5).epsilon(1e-12));
    CHECK(r.v_over_delta_m0.pass);
    CHECK(r.v_over_g.ratio == doctest::Approx(6.6).epsilon(1e-12));
    CHECK_FALSE(r.v_over_g.pass);
    CHECK_FALSE(r.first_frame_valid());
    CHECK(r.gc_over_delta_m0.ratio == 0.0);
    CHECK(r.jc_valid());

    // Delta_m0 = 2 - 0.02 - 4 * 0.49 = 0.02.
    const auto weak = rwa_report(ModelParams::resonant(0, 0.49, 0.01).with_delta(-0.02));
    CHECK_FALSE(weak.v_over_delta.skipped);
    CHECK(weak.v_over_delta.ratio == doctest::Approx(24.5).epsilon(1e-12));
    CHECK(weak.v_over_delta_m0.ratio == doctest::Approx(24.5).epsilon(1e-9));
    CHECK(weak.first_frame_valid());

    const auto loose = rwa_report(ModelParams::resonant(0, 0.33), 5.0);
    CHECK(loose.v_over_g.pass);
  }

  TEST_CASE("RWA line crossings at the 0.01 level") {
    const auto c49 = rwa_line_crossings(ModelParams::resonant(0, 0.49), 0.0, 3.0);
    const auto c33 = rwa_line_crossings(ModelParams::resonant(0, 0.33), 0.0, 3.0);
    const auto c33d = rwa_line_crossings(ModelParams::resonant(0, 0.33).with_delta(0.02), 0.0, 3.0);
    REQUIRE(c49.size() == 1);
    REQUIRE(c33.size() == 1);
    REQUIRE(c33d.size() == 1);
    CHECK(std::abs(c49[0] - 1.35487) <= 1e-5);
    CHECK(std::abs(c33[0] - 2.47549) <= 1e-5);
    CHECK(std::abs(c33d[0] - 2.80891) <= 1e-5);
    // At each crossing the ratio is on the line.
    for (double xi : {c33[0]}) {
      CHECK(effective_params(ModelParams::resonant(xi, 0.33)).gc_over_delta_m0() ==
            doctest::Approx(0.01).epsilon(1e-9));
    }
    CHECK(rwa_line_crossings(ModelParams::resonant(0, 0.33, 0.0), 0.0, 3.0).empty());
  }
}
