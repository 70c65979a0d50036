#pragma once

#include <cstddef>
#include <span>

namespace avkde {

//! Kahan compensated accumulator. Adding in a fixed order gives a fixed result.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

//! Pairwise (cascade) summation with a compensated base case. Deterministic:
//! the reduction tree depends only on the element count.
double pairwise_sum(std::span<const double> xs);

//! Arithmetic mean via pairwise summation.
double stable_mean(std::span<const double> xs);

//! Unbiased sample variance ((n-1) divisor), two-pass with pairwise sums.
double sample_variance(std::span<const double> xs);

}  // namespace avkde
