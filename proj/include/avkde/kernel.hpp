#pragma once

#include <memory>
#include <span>
#include <vector>

namespace avkde {

//! Gaussian kernel constants: ∫K² = 1/(2√π) and c_K = ∫u²K(u)du = 1.
struct GaussianKernel {
  static constexpr double norm_sq = 0.28209479177387814;
  static constexpr double second_moment = 1.0;
};

//! Standard normal density (2π)^(-1/2) exp(-u²/2).
double kernel_eval(double u);

//! Even derivatives of the Gaussian density via Hermite polynomials:
//! order 4: (u⁴-6u²+3)φ(u); order 6: (u⁶-15u⁴+45u²-15)φ(u).
//! Other orders throw std::invalid_argument.
double kernel_deriv(int order, double u);

//! Centered normal density with standard deviation sd > 0.
double normal_pdf(double x, double sd);

//! Observations are stored sorted ascending and shared immutably between
//! estimators built on the same data.
using Sample = std::vector<double>;
using SamplePtr = std::shared_ptr<const Sample>;

//! Validates (non-empty, all finite), sorts, and freezes a sample.
SamplePtr make_sample(Sample values);

//! One kernel density estimate: a sample plus a bandwidth in data units.
struct KdeSpec {
  SamplePtr sample;
  double bandwidth = 0.0;
};

//! f̂_h(x) = (nh)^(-1) Σ_i K((X_i - x)/h). Throws on bandwidth <= 0.
double kde_eval(const KdeSpec& spec, double x);

//! Grid evaluation; each entry equals the pointwise kde_eval bit for bit.
std::vector<double> kde_eval(const KdeSpec& spec, std::span<const double> xs);

//! Exact ∫ f̂_{h_i} f̂_{h_j} for two estimates sharing one sample:
//! n^(-2) Σ_a Σ_b φ_s(X_a - X_b) with s = sqrt(h_i² + h_j²).
//! Throws if the specs do not share the same sample.
double gram_inner(const KdeSpec& spec_i, const KdeSpec& spec_j);

//! Σ over ordered pairs (i,j) of g((X_i - X_j)/scale) for an even function g,
//! optionally with the i=j diagonal. Used by the plug-in selectors. The sum
//! skips pairs beyond 16·scale apart; the dropped Gaussian-tail terms are
//! below double round-off relative to any retained term.
enum class PairKernel { Phi, Phi4, Phi6 };
double pair_sum(const Sample& sorted, double scale, PairKernel g, bool include_diagonal);

}  // namespace avkde
