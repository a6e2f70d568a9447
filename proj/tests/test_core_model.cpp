#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vdw/core_model.hpp"

using namespace vdw;

TEST_CASE("nondimensionalize") {
  const DimensionlessPoint free_atoms = nondimensionalize({0.0, 1.0, 1.0}, 2.0);
  CHECK(free_atoms.x == 2.0);
  CHECK(free_atoms.kappa == 0.0);

  // q^2 omega / (2 pi m) = 0.5 at q = sqrt(pi), m = omega = 1
  const DimensionlessPoint pt = nondimensionalize({std::sqrt(M_PI), 1.0, 1.0}, 1.0);
  CHECK(pt.x == doctest::Approx(1.0));
  CHECK(pt.kappa == doctest::Approx(0.5).epsilon(1e-15));

  // kappa scales as 1/m
  const double s = 3.7;
  const double k1 = nondimensionalize({1.3, 1.0, 2.0}, 1.0).kappa;
  const double k2 = nondimensionalize({1.3, s, 2.0}, 1.0).kappa;
  CHECK(k1 / k2 == doctest::Approx(s).epsilon(1e-14));

  CHECK_THROWS_AS(nondimensionalize({1.0, 1.0, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(nondimensionalize({1.0, 1.0, 1.0}, -1.0), std::domain_error);
  CHECK_THROWS_AS(nondimensionalize({1.0, -1.0, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(nondimensionalize({1.0, 1.0, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("mode_argument at the endpoints") {
  const DimensionlessPoint pt{1.0, 0.5};
  const double g = coupling_ratio(pt);
  CHECK(mode_argument(Mode::Parallel, 0.0, pt).value ==
        doctest::Approx(0.25 * g * g).epsilon(1e-14));
  CHECK(mode_argument(Mode::Perp, 0.0, pt).value ==
        doctest::Approx(g * g).epsilon(1e-14));

  const DimensionlessPoint off{2.0, 0.0};
  CHECK(mode_argument(Mode::Parallel, 0.7, off).value == 0.0);
  CHECK(mode_argument(Mode::Perp, 0.7, off).value == 0.0);

  CHECK(mode_argument(Mode::Parallel, 100.0, pt).value < 1e-30);
  CHECK(mode_argument(Mode::Perp, 100.0, pt).value < 1e-30);

  CHECK_THROWS_AS(mode_argument(Mode::Perp, -0.1, pt), std::domain_error);
}

TEST_CASE("perp argument strictly decreases in u") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ux(-2.0, 2.0);   // log10 x
  std::uniform_real_distribution<double> uk(-3.0, 1.0);   // log10 kappa
  std::uniform_real_distribution<double> uu(0.0, 12.0);
  for (int trial = 0; trial < 200; ++trial) {
    const DimensionlessPoint pt{std::pow(10.0, ux(rng)), std::pow(10.0, uk(rng))};
    double u1 = uu(rng), u2 = uu(rng);
    if (u1 > u2) std::swap(u1, u2);
    if (u2 - u1 < 1e-3) u2 += 1e-2;
    CHECK(mode_argument(Mode::Perp, u1, pt).value >
          mode_argument(Mode::Perp, u2, pt).value);
  }
}

TEST_CASE("mode arguments are homogeneous of degree 2 in kappa") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ud(0.1, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = ud(rng), k = ud(rng), u = ud(rng), s = ud(rng);
    for (Mode mode : {Mode::Parallel, Mode::Perp}) {
      const double base = mode_argument(mode, u, {x, k}).value;
      const double scaled = mode_argument(mode, u, {x, s * k}).value;
      CHECK(scaled == doctest::Approx(s * s * base).epsilon(1e-13));
    }
  }
}

TEST_CASE("coupling ratio and the threshold conditions") {
  CHECK(coupling_ratio({1.0, 0.5}) == 0.5);
  const double kappa = 0.5;
  CHECK(coupling_ratio({std::cbrt(kappa), kappa}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(coupling_ratio({std::cbrt(0.5 * kappa), kappa}) == doctest::Approx(2.0).epsilon(1e-14));
}
