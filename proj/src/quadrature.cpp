#include "avkde/quadrature.hpp"

#include <stdexcept>

#include "avkde/summation.hpp"

namespace avkde {

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("uniform_grid: lo must be below hi");
  std::vector<double> grid(points);
  const double span = hi - lo;
  const double denom = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = lo + span * (static_cast<double>(i) / denom);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

double trapezoid(std::span<const double> ys, double spacing) {
  if (ys.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
  double interior = pairwise_sum(ys.subspan(1, ys.size() - 2));
  return spacing * (interior + 0.5 * (ys.front() + ys.back()));
}

}  // namespace avkde
