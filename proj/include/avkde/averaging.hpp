#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "avkde/bandwidth.hpp"
#include "avkde/kernel.hpp"

namespace avkde {

enum class WeightMode { linear, convex };

//! Integrated covariance model: A_ij = [n √(2π(h_i²+h_j²))]^(-1), the
//! Gaussian closed form of (n h_i h_j)^(-1) ∫K(u/h_i)K(u/h_j)du.
Eigen::MatrixXd build_A(std::size_t n, const BandwidthSet& bandwidths);

//! Integrated squared-bias factor: B = vvᵀ with v_i = c_K h_i²/2 (rank one).
Eigen::MatrixXd build_B(const BandwidthSet& bandwidths);

//! Σ̂ = A + γ̂B with conditioning metadata.
struct SigmaModel {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd sigma;
  double gamma_hat = 0.0;
  double pilot_bandwidth = 0.0;
  bool gamma_fallback = false;  // degenerate γ̂ replaced by the normal reference
  double condition_estimate = 0.0;
};

//! Assembles Σ̂ from a known γ̂.
SigmaModel build_sigma_model(std::size_t n, const BandwidthSet& bandwidths, double gamma_hat);

//! Assembles Σ̂ estimating γ̂ from the sample; a degenerate estimate falls
//! back to the normal-reference value at the sample's robust scale and sets
//! gamma_fallback.
SigmaModel build_sigma_model(std::size_t n, const BandwidthSet& bandwidths,
                             const SamplePtr& sample);

//! 2-norm condition estimate |λ|max/|λ|min of a symmetric matrix.
double condition_estimate(const Eigen::MatrixXd& sym);

//! Weights constrained to sum to one; convex mode also keeps them >= -1e-12.
struct WeightVector {
  std::vector<double> weights;
  WeightMode mode = WeightMode::linear;
};

//! λ = Σ̂^(-1)1 normalized to sum one, solved through the spectral
//! factorization (never an explicit inverse). Throws SingularMatrixError when
//! the condition estimate exceeds 1e12.
WeightVector solve_weights_linear(const Eigen::MatrixXd& sigma);

//! Exact minimizer of λᵀΣ̂λ over the probability simplex by enumeration of
//! all nonempty support sets (k <= 8). Ties within 1e-14 in objective prefer
//! the larger support, then the lexicographically smaller one.
WeightVector solve_weights_convex(const Eigen::MatrixXd& sigma);

//! min λᵀQλ - qᵀλ over the probability simplex, same enumeration and
//! tie-breaking; solve_weights_convex is the q = 0 case. Returns the weights.
std::vector<double> simplex_qp(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q);

inline constexpr double kConditionLimit = 1e12;

struct AvDiagnostics {
  double gamma_hat = 0.0;
  double pilot_bandwidth = 0.0;
  bool gamma_fallback = false;
  double condition_estimate = 0.0;
};

//! Weighted combination of kernel estimates. The AV path produces weights
//! summing to one; the split/aggregation baselines may not.
struct AveragedEstimator {
  std::vector<KdeSpec> experts;
  std::vector<double> weights;
  AvDiagnostics diagnostics;

  double eval(double x) const;
  std::vector<double> eval(std::span<const double> xs) const;
  double max_bandwidth() const;
};

//! The averaged estimator f̂_AV: estimates γ̂, assembles Σ̂ = A + γ̂B, solves
//! for the requested weights, and pairs them with the per-bandwidth experts.
//! Requires 2 <= k <= 8 experts and n >= 4.
AveragedEstimator average_estimator(const SamplePtr& sample, const BandwidthSet& bandwidths,
                                    WeightMode mode);

}  // namespace avkde
