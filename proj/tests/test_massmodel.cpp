#include <cmath>

#include "doctest.h"
#include "pdm/errors.hpp"
#include "pdm/grid.hpp"
#include "pdm/profile.hpp"
#include "test_support.hpp"

using namespace pdm;
using pdm::testing::Rng;

TEST_CASE("exponential profile values and derivatives") {
  const ExponentialProfile unit({1, 1, 1, 1});
  CHECK(unit.mass(0) == 1.0);
  CHECK(unit.mass_d1(0) == 1.0);
  CHECK(unit.mass_d2(0) == 1.0);

  const ExponentialProfile p({1, 2, 0.5, 1});
  CHECK(p.mass(2) == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-15));
  CHECK(p.mass(2) == doctest::Approx(5.43656365691809).epsilon(1e-14));
}

TEST_CASE("log-linearity: d1^2 = mass * d2 and monotonicity") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SystemConfig sys;
    sys.m0 = rng.log_uniform(0.1, 10);
    sys.c = rng.uniform(-3, 3);
    if (sys.c == 0) sys.c = 1;
    const ExponentialProfile p(sys);
    const double x = rng.uniform(-5, 5);
    const double lhs = p.mass_d1(x) * p.mass_d1(x);
    const double rhs = p.mass(x) * p.mass_d2(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    CHECK(p.mass_d1(x) / p.mass(x) == doctest::Approx(sys.c).epsilon(1e-14));

    const double step = 0.75;
    if (sys.c > 0) {
      CHECK(p.mass(x + step) > p.mass(x));
    } else {
      CHECK(p.mass(x + step) < p.mass(x));
    }
  }
}

TEST_CASE("bare potential") {
  const ExponentialProfile p({1, 1, 1, 2});
  CHECK(p.potential(0) == 2.0);
  CHECK(p.potential(std::log(3.0)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(bare_potential(p, 1.25) == p.potential(1.25));
  for (double x : {-3.0, 0.0, 1.5, 7.0}) {
    CHECK(p.potential(x) / p.mass(x) == doctest::Approx(2.0).epsilon(1e-15));
  }
}

TEST_CASE("grid geometry") {
  const Grid g(-1, 1, 3);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.point(0) == doctest::Approx(-0.5));
  CHECK(g.point(1) == doctest::Approx(0.0));
  CHECK(g.point(2) == doctest::Approx(0.5));

  const Grid fine = g.refined();
  CHECK(fine.size() == 7);
  CHECK(fine.spacing() == doctest::Approx(g.spacing() / 2));

  CHECK_THROWS_AS(Grid(0, 1, 2), GridTooCoarse);
  CHECK_THROWS_AS(Grid(1, 0, 8), InvalidConfig);
  CHECK_THROWS_AS(Grid(0, 0, 8), InvalidConfig);
}

TEST_CASE("sampling") {
  const Grid g(0, 2, 3);
  const GridFunction ones = sample([](double) { return 1.0; }, g);
  for (double v : ones.values) CHECK(v == 1.0);

  const GridFunction ident = sample([](double x) { return x; }, Grid(-1, 1, 3));
  CHECK(ident.values[0] == doctest::Approx(-0.5));
  CHECK(ident.values[1] == doctest::Approx(0.0));
  CHECK(ident.values[2] == doctest::Approx(0.5));

  const ExponentialProfile p({1, 1, 1, 1});
  const GridFunction m = sample([&](double x) { return p.mass(x); }, g);
  CHECK(m.values[0] == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  CHECK(m.values[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(m.values[2] == doctest::Approx(std::exp(1.5)).epsilon(1e-15));

  CHECK_THROWS_AS(GridFunction(g, {1.0, 2.0}), InvalidConfig);
}

TEST_CASE("system config validation") {
  SystemConfig sys;
  CHECK_NOTHROW(sys.validate());
  sys.c = 0;
  CHECK_THROWS_AS(sys.validate(), InvalidConfig);
  sys.c = 1;
  sys.m0 = -1;
  CHECK_THROWS_AS(sys.validate(), InvalidConfig);
  sys.m0 = 1;
  sys.hbar = 0;
  CHECK_THROWS_AS(sys.validate(), InvalidConfig);

  CHECK(pdm::testing::reference_system().kappa() == doctest::Approx(1.0).epsilon(1e-15));
  SystemConfig empty_well = pdm::testing::reference_system();
  empty_well.V0 = -2;
  CHECK_NOTHROW(empty_well.validate());  // V0 is checked where bound states are needed
  CHECK_THROWS_AS(empty_well.kappa(), NoBoundStates);
}
