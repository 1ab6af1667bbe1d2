#include "pdm/susy.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

double orientation(const SystemConfig& sys) { return sys.c > 0 ? 1.0 : -1.0; }

// Central first derivative, second-order one-sided at the ends.
std::vector<double> derivative(const GridFunction& f) {
  const int n = f.grid.size();
  const double h = f.grid.spacing();
  const auto& v = f.values;
  std::vector<double> d(n);
  d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
  for (int i = 1; i < n - 1; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
  return d;
}

}  // namespace

Superpotential solve_superpotential(const SystemConfig& sys) {
  sys.validate();
  if (sys.V0 <= 0) throw NoBoundStates("V0 <= 0: factorization requires a confining well");
  Superpotential sp;
  sp.w_plus = std::sqrt(sys.V0);
  sp.w_minus = -sys.hbar * std::abs(sys.c) / (2.0 * std::sqrt(2.0 * sys.m0));
  sp.E0 = -2.0 * sp.w_plus * sp.w_minus;
  return sp;
}

KineticWeight kinetic_weight(const SystemConfig& sys, double x) {
  sys.validate();
  KineticWeight w;
  w.g = sys.hbar / std::sqrt(2.0 * sys.m0 * std::exp(sys.c * x));
  w.d1 = -0.5 * sys.c * w.g;
  w.d2 = 0.25 * sys.c * sys.c * w.g;
  return w;
}

double superpotential_value(const Superpotential& sp, const SystemConfig& sys, double x) {
  const double t = std::exp(0.5 * sys.c * x);
  return sp.w_plus * t + sp.w_minus / t;
}

double partner_potential_1(const Superpotential& sp, const SystemConfig& sys, double x) {
  const double w = superpotential_value(sp, sys, x);
  const double g0 = sys.hbar / std::sqrt(2.0 * sys.m0);
  // s * d/dx [g0 (w+ + w- e^{-cx})] = -|c| g0 w- e^{-cx}
  return w * w + std::abs(sys.c) * g0 * sp.w_minus * std::exp(-sys.c * x);
}

double partner_potential_2(const Superpotential& sp, const SystemConfig& sys, double x) {
  const double s = orientation(sys);
  const double w = superpotential_value(sp, sys, x);
  const double t = std::exp(0.5 * sys.c * x);
  const double w_d1 = 0.5 * sys.c * (sp.w_plus * t - sp.w_minus / t);
  const KineticWeight kw = kinetic_weight(sys, x);
  return w * w + s * kw.g * w_d1 - s * kw.d1 * w - kw.g * kw.d2;
}

GridFunction apply_A(const GridFunction& f, const SystemConfig& sys) {
  const Superpotential sp = solve_superpotential(sys);
  const double s = orientation(sys);
  const std::vector<double> df = derivative(f);
  std::vector<double> out(f.grid.size());
  for (int i = 0; i < f.grid.size(); ++i) {
    const double x = f.grid.point(i);
    out[i] = s * kinetic_weight(sys, x).g * df[i] +
             superpotential_value(sp, sys, x) * f.values[i];
  }
  return {f.grid, std::move(out)};
}

GridFunction apply_Adag(const GridFunction& f, const SystemConfig& sys) {
  const Superpotential sp = solve_superpotential(sys);
  const double s = orientation(sys);
  std::vector<double> product(f.grid.size());
  for (int i = 0; i < f.grid.size(); ++i) {
    product[i] = kinetic_weight(sys, f.grid.point(i)).g * f.values[i];
  }
  const std::vector<double> dp = derivative({f.grid, std::move(product)});
  std::vector<double> out(f.grid.size());
  for (int i = 0; i < f.grid.size(); ++i) {
    out[i] = -s * dp[i] + superpotential_value(sp, sys, f.grid.point(i)) * f.values[i];
  }
  return {f.grid, std::move(out)};
}

}  // namespace pdm
