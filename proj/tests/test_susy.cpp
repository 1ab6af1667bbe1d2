#include <cmath>

#include "doctest.h"
#include "pdm/ambiguity.hpp"
#include "pdm/analytic.hpp"
#include "pdm/errors.hpp"
#include "pdm/susy.hpp"
#include "test_support.hpp"

using namespace pdm;
using pdm::testing::Rng;
using pdm::testing::reference_system;

namespace {

// Discrete action of the original-space Hamiltonian (first-derivative form):
// H psi = -(hbar^2/2m) psi'' + (hbar^2/2)(m'/m^2) psi' + (U + V) psi.
// Test-only: used to probe the intertwining relation against independent
// discretizations.
std::vector<double> apply_h_psi(const GridFunction& f, const SystemConfig& sys,
                                const OrderingParams& ordering) {
  const ExponentialProfile profile(sys);
  const int n = f.grid.size();
  const double h = f.grid.spacing();
  const auto& v = f.values;
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double x = f.grid.point(i);
    double d1, d2;
    if (i == 0) {
      d1 = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
      d2 = (v[0] - 2 * v[1] + v[2]) / (h * h);
    } else if (i == n - 1) {
      d1 = (3 * v[n - 1] - 4 * v[n - 2] + v[n - 3]) / (2 * h);
      d2 = (v[n - 1] - 2 * v[n - 2] + v[n - 3]) / (h * h);
    } else {
      d1 = (v[i + 1] - v[i - 1]) / (2 * h);
      d2 = (v[i + 1] - 2 * v[i] + v[i - 1]) / (h * h);
    }
    const double m = profile.mass(x);
    const double hb2 = sys.hbar * sys.hbar;
    out[i] = -hb2 / (2 * m) * d2 + hb2 / 2 * profile.mass_d1(x) / (m * m) * d1 +
             (ambiguity_potential(ordering, profile, x) + profile.potential(x)) * v[i];
  }
  return out;
}

// C-infinity bump supported on (center - width, center + width).
double bump(double x, double center, double width) {
  const double t = (x - center) / width;
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

}  // namespace

TEST_CASE("solved superpotential coefficients") {
  const SystemConfig sys = reference_system();  // V0 = 2
  const Superpotential sp = solve_superpotential(sys);

  CHECK(sp.w_plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sp.w_minus == doctest::Approx(-1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
  CHECK(sp.E0 == doctest::Approx(1.0).epsilon(1e-14));

  // E0 equals the analytic nu = 0 ground level
  const Spectrum nu0 = morse_spectrum(sys, preset("zhu-kroemer").params, 0);
  CHECK(sp.E0 == doctest::Approx(nu0.levels[0].energy).epsilon(1e-14));

  // w_minus does not depend on V0
  for (double v0 : {0.5, 1.0, 2.0, 4.0}) {
    SystemConfig s = sys;
    s.V0 = v0;
    CHECK(solve_superpotential(s).w_minus == sp.w_minus);
    CHECK(solve_superpotential(s).w_plus == doctest::Approx(std::sqrt(v0)).epsilon(1e-15));
  }

  SystemConfig no_well = sys;
  no_well.V0 = 0;
  CHECK_THROWS_AS(solve_superpotential(no_well), NoBoundStates);
}

TEST_CASE("the fixed literature ansatz is the V0 = hbar^2 c^2 / (32 m0) member") {
  SystemConfig sys{1, 1, 1, 1.0 / 32.0};
  const Superpotential sp = solve_superpotential(sys);
  // hbar c sqrt(2) / (8 sqrt(m0)) and -hbar c / (2 sqrt(2 m0))
  CHECK(sp.w_plus == doctest::Approx(std::sqrt(2.0) / 8.0).epsilon(1e-15));
  CHECK(sp.w_minus == doctest::Approx(-1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("superpotential values and node") {
  const SystemConfig sys = reference_system();
  const Superpotential sp = solve_superpotential(sys);

  CHECK(superpotential_value(sp, sys, 0.0) ==
        doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));

  // single zero at e^{cx} = -w_minus / w_plus
  const double x_node = std::log(-sp.w_minus / sp.w_plus) / sys.c;
  CHECK(std::abs(superpotential_value(sp, sys, x_node)) < 1e-13);
  CHECK(superpotential_value(sp, sys, x_node - 0.5) < 0.0);
  CHECK(superpotential_value(sp, sys, x_node + 0.5) > 0.0);

  // far left the w_minus e^{-cx/2} term dominates: W -> 0^- is false, it
  // diverges negatively; check the sign
  CHECK(superpotential_value(sp, sys, -30.0) < 0.0);
}

TEST_CASE("kinetic weight derivatives") {
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    SystemConfig sys = reference_system();
    sys.c = rng.uniform(-2, 2);
    if (sys.c == 0) sys.c = 1;
    const double x = rng.uniform(-3, 3);
    const KineticWeight w = kinetic_weight(sys, x);
    CHECK(w.g == doctest::Approx(sys.hbar / std::sqrt(2.0 * sys.m0 * std::exp(sys.c * x)))
                     .epsilon(1e-14));
    CHECK(w.d1 == doctest::Approx(-0.5 * sys.c * w.g).epsilon(1e-14));
    CHECK(w.d2 == doctest::Approx(0.25 * sys.c * sys.c * w.g).epsilon(1e-14));
  }
}

TEST_CASE("factorization identity V1 + E0 = V + U_nu0") {
  for (double c : {1.0, -1.0, 0.7, 2.0}) {
    CAPTURE(c);
    SystemConfig sys = reference_system();
    sys.c = c;
    const Superpotential sp = solve_superpotential(sys);
    const ExponentialProfile profile(sys);
    const OrderingParams zk = preset("zhu-kroemer").params;

    const Grid g(c > 0 ? -12.0 / std::abs(c) : -8.0 / std::abs(c),
                 c > 0 ? 8.0 / std::abs(c) : 12.0 / std::abs(c), 1000);
    double vmax = 0;
    for (int i = 0; i < g.size(); ++i) {
      vmax = std::max(vmax, std::abs(profile.potential(g.point(i))));
    }
    double worst = 0;
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.point(i);
      const double lhs = partner_potential_1(sp, sys, x) + sp.E0;
      const double rhs = profile.potential(x) + ambiguity_potential(zk, profile, x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst < 1e-12 * vmax);
  }
}

TEST_CASE("partner potential 1 pointwise values") {
  const SystemConfig sys = reference_system();
  const Superpotential sp = solve_superpotential(sys);

  // V1(0) = V0 - hbar^2 c^2/(8 m0) - E0 = 2 - 1/8 - 1
  CHECK(partner_potential_1(sp, sys, 0.0) == doctest::Approx(7.0 / 8.0).epsilon(1e-13));

  // e^{-cx} coefficient is -hbar^2 c^2 / (8 m0): isolate it far left
  const double x = -20.0;
  const double coef = (partner_potential_1(sp, sys, x) + sp.E0) * std::exp(sys.c * x);
  CHECK(coef == doctest::Approx(-0.125).epsilon(1e-8));
  CHECK(partner_potential_1(sp, sys, x) < 0.0);
}

TEST_CASE("partner potential 2 collapses to the bare potential") {
  for (double c : {1.0, -1.0, 0.5, 3.0}) {
    CAPTURE(c);
    SystemConfig sys = reference_system();
    sys.c = c;
    const Superpotential sp = solve_superpotential(sys);
    const ExponentialProfile profile(sys);
    const Grid g(-12.0 / std::abs(c), 12.0 / std::abs(c), 1000);
    double vmax = 0, worst = 0;
    for (int i = 0; i < g.size(); ++i) {
      vmax = std::max(vmax, std::abs(profile.potential(g.point(i))));
    }
    for (int i = 0; i < g.size(); ++i) {
      const double x = g.point(i);
      worst = std::max(worst, std::abs(partner_potential_2(sp, sys, x) - profile.potential(x)));
    }
    CHECK(worst < 1e-12 * vmax);
  }
  CHECK(partner_potential_2(solve_superpotential(reference_system()), reference_system(), 0.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("SUSY gap: V2 - V1 = 2 s g W' - g g''") {
  Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    SystemConfig sys = reference_system();
    sys.c = rng.uniform(0.3, 2.0) * (rng.uniform() < 0.5 ? -1 : 1);
    sys.V0 = rng.log_uniform(0.5, 4.0);
    const double s = sys.c > 0 ? 1.0 : -1.0;
    const Superpotential sp = solve_superpotential(sys);
    const double x = rng.uniform(-4, 4);
    const KineticWeight kw = kinetic_weight(sys, x);
    const double t = std::exp(0.5 * sys.c * x);
    const double w_d1 = 0.5 * sys.c * (sp.w_plus * t - sp.w_minus / t);
    const double gap = partner_potential_2(sp, sys, x) - partner_potential_1(sp, sys, x);
    const double expected = 2.0 * s * kw.g * w_d1 - kw.g * kw.d2;
    CHECK(gap == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("A annihilates the closed-form ground state at second order") {
  const SystemConfig sys = reference_system();
  double previous = 0;
  int step = 0;
  for (int n : {512, 1025, 2051}) {
    const Grid g(-40, 8, n);
    const GridFunction psi = ground_state_closed_form(sys, g);
    const GridFunction res = apply_A(psi, sys);
    const double rel = res.max_abs() / psi.max_abs();
    if (step > 0) {
      const double ratio = previous / rel;
      CHECK(ratio > 3.3);
      CHECK(ratio < 4.8);
    }
    previous = rel;
    ++step;
  }
}

TEST_CASE("apply_A is linear and kills zero") {
  const SystemConfig sys = reference_system();
  const Grid g(-10, 5, 64);
  const GridFunction zero(g, std::vector<double>(64, 0.0));
  CHECK(apply_A(zero, sys).max_abs() == 0.0);
  CHECK(apply_Adag(zero, sys).max_abs() == 0.0);

  const GridFunction f = sample([](double x) { return std::sin(x); }, g);
  const GridFunction h = sample([](double x) { return std::exp(-x * x); }, g);
  GridFunction combo(g, std::vector<double>(64));
  for (int i = 0; i < 64; ++i) combo.values[i] = 2.0 * f.values[i] - 3.0 * h.values[i];
  const GridFunction af = apply_A(f, sys);
  const GridFunction ah = apply_A(h, sys);
  const GridFunction ac = apply_A(combo, sys);
  for (int i = 0; i < 64; ++i) {
    CHECK(ac.values[i] ==
          doctest::Approx(2.0 * af.values[i] - 3.0 * ah.values[i]).epsilon(1e-11));
  }
}

TEST_CASE("discrete adjointness on interior-supported functions") {
  const SystemConfig sys = reference_system();
  const Grid g(-10, 6, 400);
  const GridFunction f = sample([](double x) { return bump(x, -3.0, 2.5); }, g);
  const GridFunction h = sample([](double x) { return bump(x, -2.0, 3.0); }, g);
  const GridFunction af = apply_A(f, sys);
  const GridFunction adh = apply_Adag(h, sys);
  double lhs = 0, rhs = 0, scale = 0;
  for (int i = 0; i < g.size(); ++i) {
    lhs += af.values[i] * h.values[i];
    rhs += f.values[i] * adh.values[i];
    scale += std::abs(af.values[i] * h.values[i]);
  }
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, scale));
}

TEST_CASE("discrete intertwining H_bdd A - A (H_nu0 - E0) -> 0 at second order") {
  const SystemConfig sys = reference_system();
  const OrderingParams zk = preset("zhu-kroemer").params;
  const OrderingParams bdd = preset("bendaniel-duke").params;
  const Superpotential sp = solve_superpotential(sys);

  double previous = 0;
  int step = 0;
  for (int n : {400, 801, 1603}) {
    const Grid g(-14, 6, n);
    const GridFunction f = sample([](double x) { return bump(x, -4.0, 4.0); }, g);

    const GridFunction af = apply_A(f, sys);
    const std::vector<double> h2af = apply_h_psi(af, sys, bdd);
    const std::vector<double> h1f_v = apply_h_psi(f, sys, zk);
    const GridFunction h1f(g, h1f_v);
    const GridFunction ah1f = apply_A(h1f, sys);

    double worst = 0;
    for (int i = 2; i < n - 2; ++i) {
      worst = std::max(worst,
                       std::abs(h2af[i] - ah1f.values[i] + sp.E0 * af.values[i]));
    }
    if (step > 0) {
      const double ratio = previous / worst;
      CHECK(ratio > 3.0);
      CHECK(ratio < 5.2);
    }
    previous = worst;
    ++step;
  }
}
