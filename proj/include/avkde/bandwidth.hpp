#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avkde/kernel.hpp"

namespace avkde {

//! Robust spread used by all selectors: min(sd, IQR/1.34).
struct ScaleEstimate {
  double sd = 0.0;
  double iqr = 0.0;
  double robust_scale = 0.0;
};

//! Order-statistic quantile with linear interpolation at position 1+(n-1)p.
double quantile(const Sample& sorted, double p);

ScaleEstimate scale_estimate(const Sample& sorted);

//! Silverman family: constant · min(sd, IQR/1.34) · n^(-1/5). The constant is
//! 0.9 for the rule of thumb ("nrd0") and 1.06 for its variant ("nrd"). When
//! the robust scale is zero the fallback chain is sd, then |x_(1)|, then 1.
double bw_silverman(const SamplePtr& sample, double constant);

//! Sheather-Jones solve-the-equation plug-in: the root h of
//!   h = [ ‖K‖² / (n c_K² SD(α₂(h))) ]^(1/5)
//! with SD(a) = n^(-2) a^(-5) ΣΣ φ⁴((X_i-X_j)/a) (diagonal included),
//! TD(b) = -n^(-2) b^(-7) ΣΣ φ⁶((X_i-X_j)/b),
//! α₂(h) = 1.357 [SD(a)/TD(b)]^(1/7) h^(5/7), and normal-reference pilots
//! a = 0.920 λ n^(-1/7), b = 0.912 λ n^(-1/9), λ = min(sd, IQR/1.34).
//! Bracketing + bisection on [0.1, 10] × (Silverman 0.9 value) to relative
//! tolerance 1e-10. Throws BracketError when the bracket has no sign change
//! and Error when SD turns nonpositive during evaluation.
double bw_sheather_jones(const SamplePtr& sample);

//! Named positive bandwidths, at most 8 entries, labels unique.
class BandwidthSet {
public:
  struct Entry {
    std::string label;
    double h = 0.0;
  };

  static constexpr std::size_t max_size = 8;

  void add(std::string label, double h);
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }
  double max_h() const;

private:
  std::vector<Entry> entries_;
};

//! Selector names understood by the CLI and the benchmark lab.
inline constexpr std::string_view kSelectorNames[] = {"nrd0", "nrd", "sj"};

//! Runs the named selectors ("nrd0", "nrd", "sj") on the sample.
BandwidthSet select_bandwidths(const SamplePtr& sample, std::span<const std::string> selectors);

}  // namespace avkde
