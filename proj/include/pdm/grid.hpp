#pragma once

#include <functional>
#include <vector>

namespace pdm {

/// Uniform grid of interior points on (x_min, x_max). The endpoints carry the
/// implicit Dirichlet zeros of the discretized problems and are not stored:
///   spacing = (x_max - x_min) / (n + 1),  point(i) = x_min + (i+1) spacing.
class Grid {
public:
  Grid(double x_min, double x_max, int n);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int size() const { return n_; }
  double spacing() const { return spacing_; }
  double point(int i) const { return x_min_ + (i + 1) * spacing_; }

  /// Same interval with halved spacing (n -> 2n + 1).
  Grid refined() const { return Grid(x_min_, x_max_, 2 * n_ + 1); }

  bool operator==(const Grid& other) const = default;

private:
  double x_min_, x_max_;
  int n_;
  double spacing_;
};

/// A real-valued function sampled on a grid, the carrier for potentials,
/// wavefunctions and operator actions.
struct GridFunction {
  Grid grid;
  std::vector<double> values;

  GridFunction(const Grid& g, std::vector<double> v);

  double max_abs() const;
  /// Discrete L2 norm sqrt(sum v_i^2 * spacing).
  double norm() const;
};

GridFunction sample(const std::function<double(double)>& f, const Grid& grid);

}  // namespace pdm
