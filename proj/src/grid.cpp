#include "pdm/grid.hpp"

#include <cmath>
#include <utility>

#include "pdm/errors.hpp"

namespace pdm {

Grid::Grid(double x_min, double x_max, int n) : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw InvalidConfig("grid requires finite x_min < x_max");
  }
  if (n < 3) throw GridTooCoarse("grid needs at least 3 interior points");
  spacing_ = (x_max - x_min) / (n + 1);
}

GridFunction::GridFunction(const Grid& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw InvalidConfig("grid function length does not match grid size");
  }
}

double GridFunction::max_abs() const {
  double m = 0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::norm() const {
  double s = 0;
  for (double v : values) s += v * v;
  return std::sqrt(s * grid.spacing());
}

GridFunction sample(const std::function<double(double)>& f, const Grid& grid) {
  std::vector<double> values(grid.size());
  for (int i = 0; i < grid.size(); ++i) values[i] = f(grid.point(i));
  return {grid, std::move(values)};
}

}  // namespace pdm
