#include "avkde/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avkde/bandwidth.hpp"
#include "avkde/errors.hpp"

namespace avkde {

namespace {

constexpr double kPhi4AtZero = 1.1968268412042982;  // 3·φ(0)

}  // namespace

double gamma_normal_reference(double sigma) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("gamma_normal_reference: sigma must be positive");
  return 3.0 / (8.0 * std::sqrt(std::numbers::pi) * std::pow(sigma, 5.0));
}

CurvatureEstimate estimate_gamma(const SamplePtr& sample, double pilot_bandwidth) {
  if (!sample || sample->size() < 2)
    throw std::invalid_argument("estimate_gamma: need at least 2 observations");
  if (!(pilot_bandwidth > 0.0))
    throw std::invalid_argument("estimate_gamma: pilot bandwidth must be positive");
  const Sample& xs = *sample;
  const double n = static_cast<double>(xs.size());
  double s = pair_sum(xs, pilot_bandwidth, PairKernel::Phi4, /*include_diagonal=*/false);
  double gamma = s / (n * (n - 1.0) * std::pow(pilot_bandwidth, 5.0));
  if (!(gamma > 0.0))
    throw DegenerateGammaError("estimate_gamma: nonpositive curvature estimate", gamma,
                               pilot_bandwidth);
  return {gamma, pilot_bandwidth};
}

CurvatureEstimate estimate_gamma(const SamplePtr& sample) {
  if (!sample || sample->size() < 4)
    throw std::invalid_argument("estimate_gamma: need at least 4 observations");
  const Sample& xs = *sample;
  if (xs.front() == xs.back())
    throw std::invalid_argument("estimate_gamma: sample is constant");
  ScaleEstimate sc = scale_estimate(xs);
  double sigma = sc.robust_scale > 0.0 ? sc.robust_scale : sc.sd;
  if (!(sigma > 0.0))
    throw std::invalid_argument("estimate_gamma: zero scale estimate");
  const double n = static_cast<double>(xs.size());
  double psi6 = -15.0 / (16.0 * std::sqrt(std::numbers::pi) * std::pow(sigma, 7.0));
  double pilot = std::pow(-2.0 * kPhi4AtZero / (GaussianKernel::second_moment * psi6 * n),
                          1.0 / 7.0);
  return estimate_gamma(sample, pilot);
}

}  // namespace avkde
