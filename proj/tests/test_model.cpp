#include "doctest.h"

#include <cmath>
#include <limits>

#include "rabiqpt/error.hpp"
#include "rabiqpt/model.hpp"

using namespace rabiqpt;

TEST_SUITE("model") {
  TEST_CASE("construction keeps the inputs and derives the detuning") {
    const ModelParams p(1.02, 1.0, 0.05, 2.48, 0.33);
    CHECK(p.omega0() == 1.02);
    CHECK(p.omega_c() == 1.0);
    CHECK(p.g() == 0.05);
    CHECK(p.xi() == 2.48);
    CHECK(p.v() == 0.33);
    CHECK(p.delta() == doctest::Approx(0.02).epsilon(1e-15));
  }

  TEST_CASE("resonant defaults") {
    const auto p = ModelParams::resonant(3.0, 0.18);
    CHECK(p.omega0() == 1.0);
    CHECK(p.omega_c() == 1.0);
    CHECK(p.g() == 0.05);
    CHECK(p.delta() == 0.0);
  }

  TEST_CASE("invalid parameters are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ModelParams(1, 0, 0.05, 0, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, -1, 0.05, 0, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, 1, 0.05, 0, 0), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, 1, -0.05, 0, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, 1, 0.05, -1, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(nan, 1, 0.05, 0, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, 1, inf, 0, 0.33), InvalidParams);
    CHECK_THROWS_AS(ModelParams(1, 1, 0.05, 0, 0.33).with_g(-1), InvalidParams);
    CHECK_NOTHROW(ModelParams(-1, 1, 0, 0, 0.33));  // negative omega0 is allowed
  }

  TEST_CASE("with_* copies change one field") {
    const auto p = ModelParams::resonant(0.0, 0.33);
    CHECK(p.with_xi(2.0).xi() == 2.0);
    CHECK(p.with_g(0.1).g() == 0.1);
    CHECK(p.with_v(0.49).v() == 0.49);
    const auto d = p.with_delta(0.02);
    CHECK(d.omega_c() == 1.0);
    CHECK(d.delta() == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(p.with_xi(0.0) == p);
  }

  TEST_CASE("coupling regimes") {
    CHECK(classify_regime(0.05, 1.0).label == Regime::strong);
    CHECK(classify_regime(0.1, 1.0).label == Regime::ultrastrong);
    CHECK(classify_regime(0.99, 1.0).label == Regime::ultrastrong);
    CHECK(classify_regime(1.0, 1.0).label == Regime::deep_strong);
    CHECK(classify_regime(5.0, 1.0).ratio == 5.0);
    CHECK(classify_regime(ModelParams::resonant(0, 0.33)).label == Regime::strong);
    CHECK(to_string(Regime::deep_strong) == "deep-strong");
    CHECK(to_string(Regime::ultrastrong) == "ultrastrong");
  }
}
