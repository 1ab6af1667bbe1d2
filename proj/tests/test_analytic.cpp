#include <cmath>

#include "doctest.h"
#include "pdm/analytic.hpp"
#include "pdm/errors.hpp"
#include "test_support.hpp"

using namespace pdm;
using pdm::testing::Rng;
using pdm::testing::reference_system;

namespace {

OrderingParams random_real_ordering(Rng& rng) {
  for (;;) {
    const double a = rng.uniform(-0.9, 2.0);
    const double alpha = rng.uniform(-1.5, 0.5);
    const double gamma = rng.uniform(-1.5, 0.5);
    try {
      OrderingParams ord = make_ordering(a, alpha, -1.0 - alpha - gamma, gamma);
      if (nu_value(ord).real()) return ord;
    } catch (const Error&) {
    }
  }
}

SystemConfig random_system(Rng& rng) {
  SystemConfig sys;
  sys.hbar = rng.log_uniform(0.1, 10);
  sys.m0 = rng.log_uniform(0.1, 10);
  sys.V0 = rng.log_uniform(0.1, 10);
  sys.c = rng.log_uniform(0.1, 10) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  return sys;
}

}  // namespace

TEST_CASE("morse reduction") {
  const SystemConfig sys = reference_system();

  for (const char* name : {"zhu-kroemer", "li-kuhn", "weyl"}) {
    const MorseReduction red = morse_reduction(sys, preset(name).params);
    CHECK(red.epsilon == 0.0);  // q = c^2/8 exactly for exact nu = 0 orderings
    CHECK(red.quadratic_strength == sys.V0);
    CHECK(red.weight_exponent == sys.c);
  }

  const MorseReduction bdd = morse_reduction(sys, preset("bendaniel-duke").params);
  CHECK(bdd.epsilon == doctest::Approx(-0.125).epsilon(1e-15));

  CHECK_THROWS_AS(morse_reduction(sys, preset("gora-williams").params), ComplexOrdering);
}

TEST_CASE("epsilon = -hbar^2 c^2 nu^2 / (8 m0) for every real ordering") {
  Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    const SystemConfig sys = random_system(rng);
    const OrderingParams ord = random_real_ordering(rng);
    const MorseReduction red = morse_reduction(sys, ord);
    const double nu = *nu_value(ord).nu;
    const double expected = -sys.hbar * sys.hbar * sys.c * sys.c * nu * nu / (8.0 * sys.m0);
    CHECK(std::abs(red.epsilon - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    CHECK(red.epsilon <= 0.0);
  }
}

TEST_CASE("morse spectrum for the reference well") {
  const SystemConfig sys = reference_system();  // kappa = 1

  const Spectrum nu0 = morse_spectrum(sys, preset("zhu-kroemer").params, 3);
  REQUIRE(nu0.levels.size() == 4);
  CHECK(nu0.levels[0].energy == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(nu0.levels[1].energy == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(nu0.levels[2].energy == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(nu0.levels[3].energy == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(nu0.marginal_branch);
  CHECK(nu0.kappa == doctest::Approx(1.0).epsilon(1e-15));

  const Spectrum bdd = morse_spectrum(sys, preset("bendaniel-duke").params, 3);
  CHECK(bdd.levels[0].energy == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bdd.levels[1].energy == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(bdd.levels[2].energy == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(bdd.levels[3].energy == doctest::Approx(8.0).epsilon(1e-14));
  CHECK_FALSE(bdd.marginal_branch);

  CHECK_THROWS_AS(morse_spectrum(sys, preset("gora-williams").params, 3), ComplexOrdering);

  SystemConfig no_well = sys;
  no_well.V0 = -1.0;
  CHECK_THROWS_AS(morse_spectrum(no_well, preset("weyl").params, 3), NoBoundStates);
  CHECK_THROWS_AS(morse_spectrum(sys, preset("weyl").params, -1), InvalidConfig);
}

TEST_CASE("oscillator mapping") {
  const SystemConfig sys = reference_system();
  const OscillatorMap map = oscillator_map(sys, preset("weyl").params);
  CHECK(map.omega == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(map.l_effective == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(map.energy_rescale == doctest::Approx(4.0).epsilon(1e-15));

  const Spectrum osc = oscillator_spectrum(sys, preset("weyl").params, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(osc.levels[n].energy == doctest::Approx(2.0 * n + 1.0).epsilon(1e-14));
  }

  const OscillatorMap bdd = oscillator_map(sys, preset("bendaniel-duke").params);
  CHECK(bdd.l_effective == doctest::Approx(0.5).epsilon(1e-15));
  const Spectrum bdd_osc = oscillator_spectrum(sys, preset("bendaniel-duke").params, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(bdd_osc.levels[n].energy == doctest::Approx(2.0 * n + 2.0).epsilon(1e-14));
  }

  // (l + 1/2)^2 = nu^2
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const OrderingParams ord = random_real_ordering(rng);
    const OscillatorMap m = oscillator_map(reference_system(), ord);
    const double nu2 = nu_value(ord).nu_squared;
    const double l_half = (m.l_effective + 0.5) * (m.l_effective + 0.5);
    CHECK(l_half == doctest::Approx(nu2).epsilon(1e-12));
  }
}

TEST_CASE("both analytic routes agree at c = 2") {
  SystemConfig sys = reference_system();
  sys.c = 2.0;  // kappa = 2
  const Spectrum m = morse_spectrum(sys, preset("li-kuhn").params, 0);
  const Spectrum o = oscillator_spectrum(sys, preset("li-kuhn").params, 0);
  CHECK(m.levels[0].energy == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(o.levels[0].energy == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("route equivalence over random systems and orderings") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const SystemConfig sys = random_system(rng);
    const OrderingParams ord = random_real_ordering(rng);
    const Spectrum m = morse_spectrum(sys, ord, 9);
    const Spectrum o = oscillator_spectrum(sys, ord, 9);
    for (int n = 0; n <= 9; ++n) {
      const double rel =
          std::abs(m.levels[n].energy - o.levels[n].energy) / std::abs(m.levels[n].energy);
      CHECK(rel <= 1e-12);
    }
  }
}

TEST_CASE("spectra scale as hbar |c| sqrt(V0) / sqrt(m0)") {
  Rng rng(41);
  const OrderingParams ord = random_real_ordering(rng);
  const SystemConfig base = random_system(rng);
  const Spectrum ref = morse_spectrum(base, ord, 4);

  SystemConfig s = base;
  s.hbar *= 3.0;
  Spectrum scaled = morse_spectrum(s, ord, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(scaled.levels[n].energy ==
          doctest::Approx(3.0 * ref.levels[n].energy).epsilon(1e-12));
  }

  s = base;
  s.c *= -2.0;  // spectra depend on c through |c| only
  scaled = morse_spectrum(s, ord, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(scaled.levels[n].energy ==
          doctest::Approx(2.0 * ref.levels[n].energy).epsilon(1e-12));
  }

  s = base;
  s.V0 *= 4.0;
  scaled = morse_spectrum(s, ord, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(scaled.levels[n].energy ==
          doctest::Approx(2.0 * ref.levels[n].energy).epsilon(1e-12));
  }

  s = base;
  s.m0 *= 4.0;
  scaled = morse_spectrum(s, ord, 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(scaled.levels[n].energy ==
          doctest::Approx(0.5 * ref.levels[n].energy).epsilon(1e-12));
  }
}

TEST_CASE("the nu = 0 tower holds one extra level below the BDD tower") {
  Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    const SystemConfig sys = random_system(rng);
    const Spectrum nu0 = morse_spectrum(sys, preset("weyl").params, 5);
    const Spectrum bdd = morse_spectrum(sys, preset("bendaniel-duke").params, 4);
    const double kappa = nu0.kappa;
    CHECK(nu0.levels[0].energy == doctest::Approx(kappa).epsilon(1e-13));
    for (int n = 1; n <= 5; ++n) {
      // shifting out the factorization energy aligns the towers level by level
      CHECK(nu0.levels[n].energy - kappa ==
            doctest::Approx(bdd.levels[n - 1].energy).epsilon(1e-12));
    }
  }
}

TEST_CASE("levels are strictly increasing in n and in nu") {
  const SystemConfig sys = reference_system();
  double last_e0 = -1;
  // nu = sqrt(1 + 2 alpha) sweeps (0, 1] as alpha goes (-1/2, 0]
  for (double alpha : {-0.4375, -0.25, -0.125, 0.0}) {
    const OrderingParams ord = make_ordering(0.0, alpha, -1.0 - alpha, 0.0);
    const Spectrum spec = morse_spectrum(sys, ord, 5);
    for (std::size_t i = 1; i < spec.levels.size(); ++i) {
      CHECK(spec.levels[i].energy > spec.levels[i - 1].energy);
      CHECK(spec.levels[i].n == spec.levels[i - 1].n + 1);
    }
    CHECK(spec.levels[0].energy > last_e0);
    last_e0 = spec.levels[0].energy;
  }
}

TEST_CASE("closed-form ground state") {
  const SystemConfig sys = reference_system();
  const Grid grid(-40, 8, 4096);
  const GridFunction psi = ground_state_closed_form(sys, grid);

  // unit discrete L2 norm
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // peak location: e^{x*} = hbar c / (2 sqrt(2 m0 V0)) = 1/4
  const double x_star = ground_state_peak(sys);
  CHECK(x_star == doctest::Approx(std::log(0.25)).epsilon(1e-12));
  int argmax = 0;
  for (int i = 0; i < grid.size(); ++i) {
    if (psi.values[i] > psi.values[argmax]) argmax = i;
  }
  CHECK(std::abs(grid.point(argmax) - x_star) <= grid.spacing());

  // decay flanks: e^{cx/2} on the left, double-exponential on the right
  const double left_ratio = psi.values[100] / psi.values[0];
  CHECK(left_ratio == doctest::Approx(std::exp(0.5 * (grid.point(100) - grid.point(0))))
                          .epsilon(1e-6));
  CHECK(psi.values[grid.size() - 1] <= 1e-6 * psi.max_abs());

  CHECK_THROWS_AS(ground_state_closed_form(sys, Grid(-2, 2, 64)), DomainTooSmall);

  SystemConfig no_well = sys;
  no_well.V0 = 0.0;
  CHECK_THROWS_AS(ground_state_closed_form(no_well, grid), NoBoundStates);
}

TEST_CASE("ground state mirrors under c -> -c") {
  SystemConfig sys = reference_system();
  const Grid grid(-40, 8, 2048);
  const GridFunction psi = ground_state_closed_form(sys, grid);

  sys.c = -1.0;
  const Grid mirror(-8, 40, 2048);
  const GridFunction psi_m = ground_state_closed_form(sys, mirror);

  // grids are reflections of each other: point(i) <-> -point(n-1-i)
  const int n = grid.size();
  for (int i = 0; i < n; i += 97) {
    CHECK(psi.values[i] == doctest::Approx(psi_m.values[n - 1 - i]).epsilon(1e-10));
  }
}
