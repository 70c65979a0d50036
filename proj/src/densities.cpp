#include "avkde/densities.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avkde/quadrature.hpp"

namespace avkde {

namespace {

constexpr std::array<Density, 5> kAll = {Density::Norm, Density::Gamma, Density::Cauchy,
                                         Density::Mix05, Density::Mix03};

double normal_component_pdf(double x, double mean) {
  return kernel_eval(x - mean);
}

double normal_component_second_deriv(double x, double mean) {
  double u = x - mean;
  return (u * u - 1.0) * kernel_eval(u);
}

}  // namespace

std::string_view density_name(Density d) {
  switch (d) {
    case Density::Norm: return "Norm";
    case Density::Gamma: return "Gamma";
    case Density::Cauchy: return "Cauchy";
    case Density::Mix05: return "Mix05";
    case Density::Mix03: return "Mix03";
  }
  throw std::invalid_argument("density_name: unknown density");
}

std::optional<Density> parse_density(std::string_view name) {
  for (Density d : kAll)
    if (density_name(d) == name) return d;
  return std::nullopt;
}

std::span<const Density> all_densities() { return kAll; }

DensitySpec density_spec(Density d) {
  DensitySpec s;
  s.id = d;
  s.name = density_name(d);
  switch (d) {
    case Density::Norm: s.window_lo = -8.0; s.window_hi = 8.0; break;
    case Density::Gamma: s.window_lo = -2.0; s.window_hi = 25.0; break;
    case Density::Cauchy: s.window_lo = -250.0; s.window_hi = 250.0; break;
    case Density::Mix05:
    case Density::Mix03: s.window_lo = -10.0; s.window_hi = 10.0; break;
  }
  return s;
}

double DensitySpec::pdf(double x) const {
  switch (id) {
    case Density::Norm:
      return kernel_eval(x);
    case Density::Gamma:
      return x > 0.0 ? x * std::exp(-x) : 0.0;
    case Density::Cauchy:
      return 1.0 / (std::numbers::pi * (1.0 + x * x));
    case Density::Mix05:
      return 0.5 * normal_component_pdf(x, -1.5) + 0.5 * normal_component_pdf(x, 1.5);
    case Density::Mix03:
      return 0.7 * normal_component_pdf(x, -1.5) + 0.3 * normal_component_pdf(x, 1.5);
  }
  throw std::invalid_argument("pdf: unknown density");
}

bool DensitySpec::has_second_deriv() const { return id != Density::Gamma; }

double DensitySpec::second_deriv(double x) const {
  switch (id) {
    case Density::Norm:
      return normal_component_second_deriv(x, 0.0);
    case Density::Gamma:
      throw std::invalid_argument(
          "second_deriv: Gamma(2,1) pdf is not twice differentiable at 0");
    case Density::Cauchy: {
      double d = 1.0 + x * x;
      return (6.0 * x * x - 2.0) / (std::numbers::pi * d * d * d);
    }
    case Density::Mix05:
      return 0.5 * normal_component_second_deriv(x, -1.5) +
             0.5 * normal_component_second_deriv(x, 1.5);
    case Density::Mix03:
      return 0.7 * normal_component_second_deriv(x, -1.5) +
             0.3 * normal_component_second_deriv(x, 1.5);
  }
  throw std::invalid_argument("second_deriv: unknown density");
}

Sample DensitySpec::draw(rng::Stream& stream, std::size_t n) const {
  if (n < 1) throw std::invalid_argument("draw: n must be at least 1");
  Sample out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (id) {
      case Density::Norm:
        out.push_back(stream.normal());
        break;
      case Density::Gamma:
        out.push_back(stream.exponential() + stream.exponential());
        break;
      case Density::Cauchy:
        out.push_back(stream.cauchy());
        break;
      case Density::Mix05:
      case Density::Mix03: {
        double p_left = id == Density::Mix05 ? 0.5 : 0.7;
        double mean = stream.uniform01() < p_left ? -1.5 : 1.5;
        out.push_back(mean + stream.normal());
        break;
      }
    }
  }
  return out;
}

double gamma_true(const DensitySpec& spec) {
  if (!spec.has_second_deriv())
    throw std::invalid_argument("gamma_true: density has no second-derivative implementation");
  auto integrand = [&](double x) {
    double d = spec.second_deriv(x);
    return d * d;
  };
  return integrate_refining(integrand, spec.window_lo, spec.window_hi, 1e-10);
}

}  // namespace avkde
