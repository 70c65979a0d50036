#pragma once

#include <stdexcept>
#include <string>

namespace avkde {

//! Base class for failures that carry diagnostic payloads.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Root bracketing found no sign change (solve-the-equation selector).
class BracketError : public Error {
public:
  BracketError(const std::string& msg, double lo, double hi, double f_lo, double f_hi)
    : Error(msg), lo(lo), hi(hi), f_lo(f_lo), f_hi(f_hi) {}

  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

//! Plug-in curvature estimate came out nonpositive; the caller decides the fallback.
class DegenerateGammaError : public Error {
public:
  DegenerateGammaError(const std::string& msg, double gamma_hat, double pilot_bandwidth)
    : Error(msg), gamma_hat(gamma_hat), pilot_bandwidth(pilot_bandwidth) {}

  double gamma_hat;
  double pilot_bandwidth;
};

//! Symmetric system too ill-conditioned to solve reliably.
class SingularMatrixError : public Error {
public:
  SingularMatrixError(const std::string& msg, double condition_estimate)
    : Error(msg), condition_estimate(condition_estimate) {}

  double condition_estimate;
};

}  // namespace avkde
