#include "doctest.h"

#include <cmath>

#include "rabiqpt/error.hpp"
#include "rabiqpt/modulation.hpp"

using namespace rabiqpt;

namespace {

struct Frozen {
  int n;
  double x;
  double value;
};

// Reference values from 30-digit arbitrary-precision evaluation.
constexpr Frozen frozen[] = {
    {0, 0.1, 0.997501562066040032},
    {0, 1, 0.76519768655796655145},
    {0, 2.48, -0.038392876569200850957},
    {0, 10, -0.2459357644513483352},
    {0, 50, 0.055812327669251815005},
    {1, 2.48, 0.50197448908361641043},
    {1, 37.5, -0.10782334401927695922},
    {2, 5, 0.046565116277752215532},
    {5, 1, 0.00024975773021123443138},
    {5, 20, 0.15116976798239497461},
    {-3, 2.5, -0.21660039103911352477},
    {-6, 2.48, 0.0040406159390786707887},
    {-11, 3, -1.7939896623474464966e-6},
    {-4, 1.36, 0.0081160693750305871858},
    {10, 0.5, 2.6131773608228030862e-13},
    {20, 10, 0.000011513369247813397783},
    {50, 25, 9.7561594280229815309e-12},
    {50, 50, 0.12140902189761506382},
    {100, 50, 1.115927369083809278e-21},
    {100, 3, 4.2603601811326252474e-141},
    {150, 40, 1.7254125695991220486e-69},
    {200, 50, 2.1383690042391173681e-97},
    {200, 10, 6.9675301553935444557e-236},
    {30, 2.41, 9.6737369324235567063e-31},
};

}  // namespace

TEST_SUITE("bessel") {
  TEST_CASE("frozen high-precision values") {
    for (const auto& f : frozen) {
      CAPTURE(f.n);
      CAPTURE(f.x);
      const double got = bessel_j(f.n, f.x);
      CHECK(std::abs(got - f.value) <= 1e-12 * std::abs(f.value) + 1e-14);
    }
  }

  TEST_CASE("agrees with the standard library") {
    for (int n = 0; n <= 40; n += 3) {
      for (double x = 0.05; x <= 50.0; x += 1.37) {
        const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
        CAPTURE(n);
        CAPTURE(x);
        CHECK(std::abs(bessel_j(n, x) - ref) <= 1e-12 * std::abs(ref) + 1e-14);
      }
    }
  }

  TEST_CASE("small arguments and zero") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    CHECK(bessel_j(-2, 0.0) == 0.0);
    CHECK(bessel_j(1, 1e-8) == doctest::Approx(5e-9).epsilon(1e-14));
    CHECK(bessel_j(0, 1e-8) == doctest::Approx(1.0 - 2.5e-17).epsilon(1e-15));
  }

  TEST_CASE("first zero of J0") {
    CHECK(std::abs(bessel_j(0, 2.404825557695772768621632)) <= 1e-14);
  }

  TEST_CASE("parity J_{-n} = (-1)^n J_n") {
    for (int n = 0; n <= 200; ++n) {
      for (double x : {0.3, 2.48, 7.0, 33.3, 50.0}) {
        const double s = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(bessel_j(-n, x) - s * bessel_j(n, x)) <= 1e-10);
      }
    }
  }

  TEST_CASE("sum rule sum_n J_n^2 = 1") {
    for (double x : {0.0, 0.5, 2.48, 3.0, 12.0, 30.0, 50.0}) {
      const auto j = bessel_j_orders(200, x);
      double s = j[0] * j[0];
      for (std::size_t n = 1; n < j.size(); ++n) s += 2.0 * j[n] * j[n];
      CAPTURE(x);
      CHECK(std::abs(s - 1.0) <= 1e-10);
    }
  }

  TEST_CASE("three-term recurrence") {
    for (double x : {0.7, 2.48, 19.0, 45.0}) {
      const auto j = bessel_j_orders(60, x);
      for (int n = 1; n < 60; ++n) {
        const double lhs = j[n - 1] + j[n + 1];
        const double rhs = 2.0 * n / x * j[n];
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + std::abs(j[n])) + 1e-15);
      }
    }
  }

  TEST_CASE("orders vector matches single evaluations") {
    const auto j = bessel_j_orders(30, 2.48);
    REQUIRE(j.size() == 31);
    for (int n = 0; n <= 30; ++n) {
      CHECK(std::abs(j[n] - bessel_j(n, 2.48)) <= 1e-13 * std::abs(j[n]) + 1e-300);
    }
  }

  TEST_CASE("envelope") {
    CHECK_THROWS_AS(bessel_j(201, 1.0), OutOfEnvelope);
    CHECK_THROWS_AS(bessel_j(-201, 1.0), OutOfEnvelope);
    CHECK_THROWS_AS(bessel_j(0, 50.5), OutOfEnvelope);
    CHECK_THROWS_AS(bessel_j(0, -1.0), OutOfEnvelope);
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), OutOfEnvelope);
    CHECK_NOTHROW(bessel_j(200, 50.0));
  }
}
