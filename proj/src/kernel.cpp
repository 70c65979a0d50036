#include "avkde/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avkde/summation.hpp"

namespace avkde {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;  // (2π)^(-1/2)

// Gaussian contributions beyond this many standard units are dropped;
// exp(-128) ≈ 2.6e-56 is below round-off relative to any retained term.
constexpr double kTailCutoff = 16.0;

double phi4(double u) {
  double u2 = u * u;
  return ((u2 - 6.0) * u2 + 3.0) * kernel_eval(u);
}

double phi6(double u) {
  double u2 = u * u;
  return (((u2 - 15.0) * u2 + 45.0) * u2 - 15.0) * kernel_eval(u);
}

}  // namespace

double kernel_eval(double u) {
  return kInvSqrt2Pi * std::exp(-0.5 * u * u);
}

double kernel_deriv(int order, double u) {
  switch (order) {
    case 4: return phi4(u);
    case 6: return phi6(u);
    default:
      throw std::invalid_argument("kernel_deriv: order must be 4 or 6, got " +
                                  std::to_string(order));
  }
}

double normal_pdf(double x, double sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("normal_pdf: sd must be positive");
  double u = x / sd;
  return kInvSqrt2Pi / sd * std::exp(-0.5 * u * u);
}

SamplePtr make_sample(Sample values) {
  if (values.empty()) throw std::invalid_argument("make_sample: empty sample");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("make_sample: non-finite observation");
  }
  std::sort(values.begin(), values.end());
  return std::make_shared<const Sample>(std::move(values));
}

double kde_eval(const KdeSpec& spec, double x) {
  if (!spec.sample || spec.sample->empty())
    throw std::invalid_argument("kde_eval: empty sample");
  if (!(spec.bandwidth > 0.0))
    throw std::invalid_argument("kde_eval: bandwidth must be positive");
  const Sample& xs = *spec.sample;
  const double h = spec.bandwidth;
  const double radius = kTailCutoff * h;
  auto lo = std::lower_bound(xs.begin(), xs.end(), x - radius);
  auto hi = std::upper_bound(lo, xs.end(), x + radius);
  KahanSum acc;
  for (auto it = lo; it != hi; ++it) acc.add(kernel_eval((*it - x) / h));
  return acc.value() / (static_cast<double>(xs.size()) * h);
}

std::vector<double> kde_eval(const KdeSpec& spec, std::span<const double> xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = kde_eval(spec, xs[i]);
  return out;
}

double pair_sum(const Sample& sorted, double scale, PairKernel g, bool include_diagonal) {
  if (!(scale > 0.0)) throw std::invalid_argument("pair_sum: scale must be positive");
  double (*fn)(double) = nullptr;
  switch (g) {
    case PairKernel::Phi: fn = &kernel_eval; break;
    case PairKernel::Phi4: fn = &phi4; break;
    case PairKernel::Phi6: fn = &phi6; break;
  }
  const std::size_t n = sorted.size();
  const double radius = kTailCutoff * scale;
  // Row sums over j > i (window pruned on sorted data), doubled by symmetry,
  // then the diagonal. Fixed accumulation order keeps results reproducible.
  std::vector<double> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    KahanSum row;
    const double xi = sorted[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = sorted[j] - xi;
      if (d > radius) break;
      row.add(fn(d / scale));
    }
    rows.push_back(row.value());
  }
  double total = 2.0 * pairwise_sum(rows);
  if (include_diagonal) total += static_cast<double>(n) * fn(0.0);
  return total;
}

double gram_inner(const KdeSpec& spec_i, const KdeSpec& spec_j) {
  if (!spec_i.sample || !spec_j.sample)
    throw std::invalid_argument("gram_inner: null sample");
  if (spec_i.sample != spec_j.sample && *spec_i.sample != *spec_j.sample)
    throw std::invalid_argument("gram_inner: estimators must share the same sample");
  if (!(spec_i.bandwidth > 0.0) || !(spec_j.bandwidth > 0.0))
    throw std::invalid_argument("gram_inner: bandwidths must be positive");
  const Sample& xs = *spec_i.sample;
  const double s = std::hypot(spec_i.bandwidth, spec_j.bandwidth);
  const double n = static_cast<double>(xs.size());
  return pair_sum(xs, s, PairKernel::Phi, /*include_diagonal=*/true) / (s * n * n);
}

}  // namespace avkde
