#pragma once

#include "avkde/kernel.hpp"

namespace avkde {

//! Plug-in estimate of γ = ∫f″(x)²dx (units: data-units^-5).
struct CurvatureEstimate {
  double gamma_hat = 0.0;
  double pilot_bandwidth = 0.0;
};

//! γ̂(g) = (n(n-1))^(-1) g^(-5) Σ_{i≠j} φ⁴((X_i-X_j)/g), diagonal excluded,
//! with the one-step normal-reference pilot
//!   g = [ -2 φ⁴(0) / (c_K ψ̂₆ n) ]^(1/7),  ψ̂₆ = -15/(16√π σ̂⁷),
//! where σ̂ = min(sd, IQR/1.34). Throws DegenerateGammaError when the
//! estimate comes out nonpositive; the caller decides the fallback.
CurvatureEstimate estimate_gamma(const SamplePtr& sample);

//! Same estimator with a caller-chosen pilot bandwidth (n >= 2).
CurvatureEstimate estimate_gamma(const SamplePtr& sample, double pilot_bandwidth);

//! γ of a normal density with the given scale: 3/(8√π σ⁵). Serves as the
//! fallback when the plug-in estimate degenerates.
double gamma_normal_reference(double sigma);

}  // namespace avkde
