#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "avkde/kernel.hpp"
#include "avkde/rng.hpp"

namespace avkde {

//! Benchmark target densities.
enum class Density { Norm, Gamma, Cauchy, Mix05, Mix03 };

std::string_view density_name(Density d);
std::optional<Density> parse_density(std::string_view name);
std::span<const Density> all_densities();

//! A benchmark density: pdf, optional second derivative, sampler, and the
//! integration window used by the ISE quadrature. Gamma(2,1) carries no
//! second derivative (its pdf has a derivative kink at zero).
struct DensitySpec {
  Density id = Density::Norm;
  std::string_view name;
  double window_lo = 0.0;
  double window_hi = 0.0;

  double pdf(double x) const;
  bool has_second_deriv() const;
  double second_deriv(double x) const;

  //! n iid draws in stream order (unsorted). Norm uses Box-Muller; Gamma(2,1)
  //! is the sum of two unit exponentials; Cauchy is tan(π(U-1/2)); mixtures
  //! pick the N(-1.5,1) component with probability 0.5 (Mix05) or 0.7 (Mix03)
  //! and then draw a normal.
  Sample draw(rng::Stream& stream, std::size_t n) const;
};

DensitySpec density_spec(Density d);

//! High-accuracy quadrature of ∫f″²: grid-doubling refinement with a 1e-10
//! relative stopping rule. Throws when the density has no second derivative.
double gamma_true(const DensitySpec& spec);

}  // namespace avkde
