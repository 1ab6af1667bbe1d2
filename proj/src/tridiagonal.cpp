#include "pdm/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest pivot magnitude kept in the Sturm recursion, scaled so that
// e^2 / pivot cannot overflow for the matrix at hand (LAPACK's pivmin).
double pivot_floor(std::span<const double> offdiag) {
  double max_e2 = 1.0;
  for (double e : offdiag) max_e2 = std::max(max_e2, e * e);
  return std::numeric_limits<double>::min() * max_e2;
}

void check_shape(std::span<const double> diag, std::span<const double> offdiag) {
  if (diag.empty() || offdiag.size() + 1 != diag.size()) {
    throw InvalidConfig("tridiagonal arrays must have sizes n and n-1");
  }
}

// Deterministic uniform in [-0.5, 0.5) from raw engine output; avoids
// std::uniform_real_distribution, whose mapping varies across libraries.
double uniform_signed(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace

int sturm_count_below(std::span<const double> diag, std::span<const double> offdiag,
                      double sigma) {
  check_shape(diag, offdiag);
  const double pivmin = pivot_floor(offdiag);
  int count = 0;
  double q = diag[0] - sigma;
  if (std::abs(q) <= pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    q = diag[i] - sigma - offdiag[i - 1] * offdiag[i - 1] / q;
    if (std::abs(q) <= pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

SpectrumBounds gershgorin_bounds(std::span<const double> diag,
                                 std::span<const double> offdiag) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();
  double lo = diag[0];
  double hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  // widen so that counts at the ends are exact despite rounding
  const double pad = std::max(std::abs(lo), std::abs(hi)) * kEps * static_cast<double>(n) +
                     std::numeric_limits<double>::min();
  return {lo - pad, hi + pad};
}

double bisect_eigenvalue(std::span<const double> diag, std::span<const double> offdiag,
                         int index, double tol_scale, int max_iter) {
  check_shape(diag, offdiag);
  if (index < 0 || index >= static_cast<int>(diag.size())) {
    throw InvalidConfig("eigenvalue index out of range");
  }
  auto [lo, hi] = gershgorin_bounds(diag, offdiag);
  for (int iter = 0; iter < max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) return mid;  // machine resolution reached
    if (hi - lo <= tol_scale * std::max(1.0, std::abs(mid))) return mid;
    if (sturm_count_below(diag, offdiag, mid) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ToleranceNotReached("bisection iteration cap reached before requested width");
}

std::vector<double> smallest_eigenvalues(std::span<const double> diag,
                                         std::span<const double> offdiag, int k,
                                         double tol_scale) {
  check_shape(diag, offdiag);
  if (k < 0 || k > static_cast<int>(diag.size())) {
    throw InvalidConfig("requested eigenvalue count out of range");
  }
  std::vector<double> lambda(k);
  for (int i = 0; i < k; ++i) lambda[i] = bisect_eigenvalue(diag, offdiag, i, tol_scale);
  return lambda;
}

namespace {

// One pass of inverse iteration machinery: LU-factor (T - shift I) with
// partial pivoting (fill-in limited to a second superdiagonal), then solve.
struct TridiagLU {
  std::vector<double> low;    // multipliers
  std::vector<double> d0;     // main diagonal of U
  std::vector<double> d1;     // first superdiagonal of U
  std::vector<double> d2;     // second superdiagonal of U (fill-in)
  std::vector<bool> swapped;  // row interchanged at step i

  TridiagLU(std::span<const double> diag, std::span<const double> offdiag, double shift) {
    const std::size_t n = diag.size();
    low.assign(n > 0 ? n - 1 : 0, 0.0);
    d0.resize(n);
    d1.assign(n > 1 ? n - 1 : 0, 0.0);
    d2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 0 ? n - 1 : 0, false);

    for (std::size_t i = 0; i < n; ++i) d0[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) d1[i] = offdiag[i];

    const double tiny = pivot_floor(offdiag);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double sub = offdiag[i];  // entry below the pivot
      if (std::abs(d0[i]) >= std::abs(sub)) {
        if (std::abs(d0[i]) <= tiny) d0[i] = std::copysign(tiny, d0[i] == 0 ? 1.0 : d0[i]);
        const double m = sub / d0[i];
        low[i] = m;
        d0[i + 1] -= m * d1[i];
        if (i + 2 < n) {
          // d2[i] stays zero: the eliminated row had no third entry
          d2[i] = 0.0;
        }
      } else {
        // swap rows i and i+1
        swapped[i] = true;
        const double m = d0[i] / sub;
        low[i] = m;
        const double u0 = sub;
        const double u1 = d0[i + 1];
        const double u2 = (i + 2 < n) ? d1[i + 1] : 0.0;
        const double r1 = d1[i];
        d0[i] = u0;
        d1[i] = u1;
        if (i + 2 < n) d2[i] = u2;
        d0[i + 1] = r1 - m * u1;
        if (i + 2 < n) d1[i + 1] = -m * u2;
      }
    }
    if (std::abs(d0[n - 1]) <= tiny) {
      d0[n - 1] = std::copysign(tiny, d0[n - 1] == 0 ? 1.0 : d0[n - 1]);
    }
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d0.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= low[i] * b[i];
    }
    for (std::size_t ri = n; ri-- > 0;) {
      double v = b[ri];
      if (ri + 1 < n) v -= d1[ri] * b[ri + 1];
      if (ri + 2 < n) v -= d2[ri] * b[ri + 2];
      b[ri] = v / d0[ri];
    }
  }
};

double vector_norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// xorshift-style splitmix64 for seeding the start vector deterministically.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<double> inverse_iteration(std::span<const double> diag,
                                      std::span<const double> offdiag, double shift,
                                      std::uint64_t seed, int max_restarts) {
  check_shape(diag, offdiag);
  const std::size_t n = diag.size();

  // backward-error scale: accept (shift, v) once it is an exact eigenpair of
  // a matrix within 1e-10 relative of T
  double matrix_scale = std::abs(shift);
  for (std::size_t i = 0; i < n; ++i) {
    matrix_scale = std::max(matrix_scale, std::abs(diag[i]) +
                                              (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                                              (i + 1 < n ? std::abs(offdiag[i]) : 0.0));
  }
  matrix_scale = std::max(matrix_scale, std::numeric_limits<double>::min());

  double current_shift = shift;
  for (int attempt = 0; attempt <= max_restarts; ++attempt) {
    const TridiagLU lu(diag, offdiag, current_shift);

    std::uint64_t state = seed + 0x6a09e667f3bcc909ULL * (attempt + 1);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = uniform_signed(splitmix64(state));

    bool finite = true;
    for (int iter = 0; iter < 6 && finite; ++iter) {
      lu.solve(v);
      // max-normalize before the 2-norm so near-singular solves cannot overflow
      double vmax = 0;
      for (double x : v) vmax = std::max(vmax, std::abs(x));
      if (!std::isfinite(vmax) || vmax == 0.0) {
        finite = false;
        break;
      }
      for (double& x : v) x /= vmax;
      const double norm = vector_norm(v);
      for (double& x : v) x /= norm;

      double resid = 0;
      for (std::size_t i = 0; i < n; ++i) {
        double r = (diag[i] - current_shift) * v[i];
        if (i > 0) r += offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) r += offdiag[i] * v[i + 1];
        resid = std::max(resid, std::abs(r));
      }
      if (resid <= 1e-10 * matrix_scale) {
        for (std::size_t i = 0; i < n; ++i) {
          if (v[i] != 0.0) {
            if (v[i] < 0) {
              for (double& x : v) x = -x;
            }
            break;
          }
        }
        return v;
      }
    }
    current_shift += 1e-8 * std::max(1.0, std::abs(current_shift));
  }
  throw SingularShift("inverse iteration failed to converge after re-shift retries");
}

}  // namespace pdm
