#include "avkde/bandwidth.hpp"

#include <cmath>
#include <stdexcept>

#include "avkde/errors.hpp"
#include "avkde/summation.hpp"

namespace avkde {

namespace {

// SD(a): plug-in estimate of ∫f″², diagonal included.
double sd_functional(const Sample& sorted, double a) {
  double n = static_cast<double>(sorted.size());
  double s = pair_sum(sorted, a, PairKernel::Phi4, /*include_diagonal=*/true);
  return s / (n * n * std::pow(a, 5.0));
}

// TD(b): plug-in estimate of ∫f‴², diagonal included.
double td_functional(const Sample& sorted, double b) {
  double n = static_cast<double>(sorted.size());
  double s = pair_sum(sorted, b, PairKernel::Phi6, /*include_diagonal=*/true);
  return -s / (n * n * std::pow(b, 7.0));
}

}  // namespace

double quantile(const Sample& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p outside [0,1]");
  double pos = static_cast<double>(sorted.size() - 1) * p;
  std::size_t lo = static_cast<std::size_t>(pos);
  double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

ScaleEstimate scale_estimate(const Sample& sorted) {
  ScaleEstimate out;
  out.sd = sorted.size() >= 2 ? std::sqrt(sample_variance(sorted)) : 0.0;
  out.iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
  out.robust_scale = std::min(out.sd, out.iqr / 1.34);
  return out;
}

double bw_silverman(const SamplePtr& sample, double constant) {
  if (!sample || sample->size() < 2)
    throw std::invalid_argument("bw_silverman: need at least 2 observations");
  if (!(constant > 0.0))
    throw std::invalid_argument("bw_silverman: constant must be positive");
  const Sample& xs = *sample;
  ScaleEstimate sc = scale_estimate(xs);
  double scale = sc.robust_scale;
  if (scale <= 0.0) scale = sc.sd;
  if (scale <= 0.0) scale = std::abs(xs.front());
  if (scale <= 0.0) scale = 1.0;
  return constant * scale * std::pow(static_cast<double>(xs.size()), -0.2);
}

double bw_sheather_jones(const SamplePtr& sample) {
  if (!sample || sample->size() < 4)
    throw std::invalid_argument("bw_sheather_jones: need at least 4 observations");
  const Sample& xs = *sample;
  if (xs.front() == xs.back())
    throw std::invalid_argument("bw_sheather_jones: sample is constant");
  const double n = static_cast<double>(xs.size());

  ScaleEstimate sc = scale_estimate(xs);
  double lambda = sc.robust_scale;
  if (!(lambda > 0.0)) lambda = sc.sd;
  if (!(lambda > 0.0))
    throw std::invalid_argument("bw_sheather_jones: zero scale estimate");

  const double a = 0.920 * lambda * std::pow(n, -1.0 / 7.0);
  const double b = 0.912 * lambda * std::pow(n, -1.0 / 9.0);
  const double sd_a = sd_functional(xs, a);
  const double td_b = td_functional(xs, b);
  if (!(sd_a > 0.0))
    throw Error("bw_sheather_jones: SD(a) nonpositive at pilot bandwidth");
  if (!(td_b > 0.0))
    throw Error("bw_sheather_jones: TD(b) nonpositive at pilot bandwidth");
  const double ratio_pow = std::pow(sd_a / td_b, 1.0 / 7.0);

  auto residual = [&](double h) {
    double alpha2 = 1.357 * ratio_pow * std::pow(h, 5.0 / 7.0);
    double sd_alpha = sd_functional(xs, alpha2);
    if (!(sd_alpha > 0.0))
      throw Error("bw_sheather_jones: SD nonpositive during root search");
    double rhs = std::pow(GaussianKernel::norm_sq /
                              (n * GaussianKernel::second_moment *
                               GaussianKernel::second_moment * sd_alpha),
                          0.2);
    return h - rhs;
  };

  double h_silver = bw_silverman(sample, 0.9);
  double lo = 0.1 * h_silver;
  double hi = 10.0 * h_silver;
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw BracketError("bw_sheather_jones: no sign change in bracket", lo, hi, f_lo, f_hi);

  constexpr double rel_tol = 1e-10;
  while (hi - lo > rel_tol * hi) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    double f_mid = residual(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void BandwidthSet::add(std::string label, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("BandwidthSet: bandwidth must be positive");
  for (const Entry& e : entries_) {
    if (e.label == label)
      throw std::invalid_argument("BandwidthSet: duplicate label '" + label + "'");
  }
  if (entries_.size() >= max_size)
    throw std::invalid_argument("BandwidthSet: at most 8 entries supported");
  entries_.push_back({std::move(label), h});
}

double BandwidthSet::max_h() const {
  double m = 0.0;
  for (const Entry& e : entries_) m = std::max(m, e.h);
  return m;
}

BandwidthSet select_bandwidths(const SamplePtr& sample, std::span<const std::string> selectors) {
  BandwidthSet out;
  for (const std::string& name : selectors) {
    if (name == "nrd0") {
      out.add(name, bw_silverman(sample, 0.9));
    } else if (name == "nrd") {
      out.add(name, bw_silverman(sample, 1.06));
    } else if (name == "sj") {
      out.add(name, bw_sheather_jones(sample));
    } else {
      throw std::invalid_argument("select_bandwidths: unknown selector '" + name +
                                  "' (expected nrd0, nrd, sj)");
    }
  }
  return out;
}

}  // namespace avkde
