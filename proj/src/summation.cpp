#include "avkde/summation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace avkde {

namespace {

constexpr std::size_t kBaseBlock = 32;

double pairwise_rec(const double* xs, std::size_t n) {
  if (n <= kBaseBlock) {
    KahanSum acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(xs[i]);
    return acc.value();
  }
  std::size_t half = n / 2;
  return pairwise_rec(xs, half) + pairwise_rec(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return pairwise_rec(xs.data(), xs.size());
}

double stable_mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("stable_mean: empty input");
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 values");
  double m = stable_mean(xs);
  std::vector<double> sq(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double d = xs[i] - m;
    sq[i] = d * d;
  }
  return pairwise_sum(sq) / static_cast<double>(xs.size() - 1);
}

}  // namespace avkde
