#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pdm {

/// Eigenvalue kernels for real symmetric tridiagonal matrices, written
/// against plain diagonal/off-diagonal arrays so they are testable on
/// textbook matrices independently of any discretization.
///
/// Eigenvalues come from Gershgorin bracketing plus Sturm-sequence bisection:
/// selected indices, guaranteed brackets, and a count function with directly
/// testable semantics. Eigenvectors come from shifted inverse iteration.

/// Number of eigenvalues strictly below sigma (Sturm sign count of the
/// LDL^T pivots, with the standard tiny-pivot substitution).
int sturm_count_below(std::span<const double> diag, std::span<const double> offdiag,
                      double sigma);

/// Interval certain to contain the whole spectrum.
struct SpectrumBounds {
  double lower;
  double upper;
};
SpectrumBounds gershgorin_bounds(std::span<const double> diag, std::span<const double> offdiag);

/// The index-th smallest eigenvalue (0-based), bisected until the bracket
/// width is below tol_scale * max(1, |midpoint|) or the midpoint is no longer
/// representable. Pure bracketing arithmetic: bit-identical results for a
/// given matrix regardless of evaluation order or thread count.
double bisect_eigenvalue(std::span<const double> diag, std::span<const double> offdiag,
                         int index, double tol_scale = 1e-10, int max_iter = 300);

/// The k smallest eigenvalues, ascending.
std::vector<double> smallest_eigenvalues(std::span<const double> diag,
                                         std::span<const double> offdiag, int k,
                                         double tol_scale = 1e-10);

/// Eigenvector by inverse iteration at the given shift, normalized to unit
/// Euclidean norm with the first nonzero component positive. On stagnation
/// the shift is nudged by 1e-8 relative and retried, at most max_restarts
/// times, then SingularShift is thrown. Deterministic for a given seed.
std::vector<double> inverse_iteration(std::span<const double> diag,
                                      std::span<const double> offdiag, double shift,
                                      std::uint64_t seed, int max_restarts = 3);

}  // namespace pdm
