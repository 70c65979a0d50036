#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace avkde {

//! Uniform grid with both endpoints included; points >= 2.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

//! Composite trapezoid rule over equally spaced samples.
double trapezoid(std::span<const double> ys, double spacing);

//! Trapezoid integral of f over [lo, hi] on `points` nodes.
template <class F>
double integrate(F&& f, double lo, double hi, std::size_t points) {
  std::vector<double> grid = uniform_grid(lo, hi, points);
  std::vector<double> ys(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) ys[i] = f(grid[i]);
  return trapezoid(ys, (hi - lo) / static_cast<double>(points - 1));
}

//! Integrates f over [lo, hi], doubling the grid from 2^12+1 nodes until the
//! value is stable to rel_tol (or 2^22+1 nodes). Returns the finest value.
template <class F>
double integrate_refining(F&& f, double lo, double hi, double rel_tol = 1e-10) {
  double prev = integrate(f, lo, hi, (std::size_t{1} << 12) + 1);
  for (int level = 13; level <= 22; ++level) {
    double cur = integrate(f, lo, hi, (std::size_t{1} << level) + 1);
    double scale = std::max(std::abs(cur), 1e-300);
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace avkde
