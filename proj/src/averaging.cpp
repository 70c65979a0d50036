#include "avkde/averaging.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "avkde/curvature.hpp"
#include "avkde/errors.hpp"
#include "avkde/summation.hpp"

namespace avkde {

namespace {

constexpr double kTieTolerance = 1e-14;
constexpr double kFeasibilityTolerance = 1e-12;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spectral(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success)
    throw Error("spectral decomposition failed");
  return es;
}

double condition_from(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es) {
  Eigen::VectorXd abs = es.eigenvalues().cwiseAbs();
  double lo = abs.minCoeff();
  double hi = abs.maxCoeff();
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

// Solves sym·x = rhs through the eigendecomposition; caller checks conditioning.
Eigen::VectorXd spectral_solve(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es,
                               const Eigen::VectorXd& rhs) {
  Eigen::VectorXd y = es.eigenvectors().transpose() * rhs;
  y.array() /= es.eigenvalues().array();
  return es.eigenvectors() * y;
}

// Lexicographic order on index lists of supports encoded as bitmasks.
bool support_lex_less(unsigned a, unsigned b) {
  while (a != 0 || b != 0) {
    int ia = a == 0 ? 32 : __builtin_ctz(a);
    int ib = b == 0 ? 32 : __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

Eigen::MatrixXd build_A(std::size_t n, const BandwidthSet& bandwidths) {
  if (n < 1) throw std::invalid_argument("build_A: n must be at least 1");
  const auto k = static_cast<Eigen::Index>(bandwidths.size());
  Eigen::MatrixXd A(k, k);
  const double two_pi = 2.0 * std::numbers::pi;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      double hi = bandwidths[static_cast<std::size_t>(i)].h;
      double hj = bandwidths[static_cast<std::size_t>(j)].h;
      double v = 1.0 / (static_cast<double>(n) * std::sqrt(two_pi * (hi * hi + hj * hj)));
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

Eigen::MatrixXd build_B(const BandwidthSet& bandwidths) {
  const auto k = static_cast<Eigen::Index>(bandwidths.size());
  Eigen::VectorXd v(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    double h = bandwidths[static_cast<std::size_t>(i)].h;
    v(i) = 0.5 * GaussianKernel::second_moment * h * h;
  }
  return v * v.transpose();
}

double condition_estimate(const Eigen::MatrixXd& sym) {
  return condition_from(spectral(sym));
}

SigmaModel build_sigma_model(std::size_t n, const BandwidthSet& bandwidths, double gamma_hat) {
  SigmaModel m;
  m.A = build_A(n, bandwidths);
  m.B = build_B(bandwidths);
  m.gamma_hat = gamma_hat;
  m.sigma = m.A + gamma_hat * m.B;
  m.condition_estimate = condition_estimate(m.sigma);
  return m;
}

SigmaModel build_sigma_model(std::size_t n, const BandwidthSet& bandwidths,
                             const SamplePtr& sample) {
  double gamma = 0.0;
  double pilot = 0.0;
  bool fallback = false;
  try {
    CurvatureEstimate est = estimate_gamma(sample);
    gamma = est.gamma_hat;
    pilot = est.pilot_bandwidth;
  } catch (const DegenerateGammaError& e) {
    ScaleEstimate sc = scale_estimate(*sample);
    double sigma_scale = sc.robust_scale > 0.0 ? sc.robust_scale : sc.sd;
    if (!(sigma_scale > 0.0)) throw;
    gamma = gamma_normal_reference(sigma_scale);
    pilot = e.pilot_bandwidth;
    fallback = true;
  }
  SigmaModel m = build_sigma_model(n, bandwidths, gamma);
  m.pilot_bandwidth = pilot;
  m.gamma_fallback = fallback;
  return m;
}

WeightVector solve_weights_linear(const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() < 1)
    throw std::invalid_argument("solve_weights_linear: square matrix required");
  auto es = spectral(sigma);
  double cond = condition_from(es);
  if (!(cond < kConditionLimit))
    throw SingularMatrixError("solve_weights_linear: sigma numerically singular", cond);
  Eigen::VectorXd raw = spectral_solve(es, Eigen::VectorXd::Ones(sigma.rows()));
  double total = raw.sum();
  if (total == 0.0 || !std::isfinite(total))
    throw SingularMatrixError("solve_weights_linear: degenerate normalization", cond);
  raw /= total;
  WeightVector out;
  out.mode = WeightMode::linear;
  out.weights.assign(raw.data(), raw.data() + raw.size());
  return out;
}

std::vector<double> simplex_qp(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q) {
  const auto k = Q.rows();
  if (k != Q.cols() || k < 1) throw std::invalid_argument("simplex_qp: square matrix required");
  if (q.size() != k) throw std::invalid_argument("simplex_qp: size mismatch");
  if (k > 8) throw std::invalid_argument("simplex_qp: support enumeration limited to k <= 8");

  auto objective = [&](const Eigen::VectorXd& w) { return w.dot(Q * w) - q.dot(w); };

  bool found = false;
  double best_obj = 0.0;
  unsigned best_mask = 0;
  Eigen::VectorXd best_w;

  const unsigned all = (1u << k) - 1u;
  for (unsigned mask = 1; mask <= all; ++mask) {
    const int m = __builtin_popcount(mask);
    std::vector<Eigen::Index> idx;
    idx.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i);

    Eigen::VectorXd w_sub(m);
    if (m == 1) {
      w_sub(0) = 1.0;
    } else {
      Eigen::MatrixXd Qs(m, m);
      Eigen::VectorXd qs(m);
      for (int r = 0; r < m; ++r) {
        qs(r) = q(idx[static_cast<std::size_t>(r)]);
        for (int c = 0; c < m; ++c)
          Qs(r, c) = Q(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
      }
      auto es = spectral(Qs);
      if (!(condition_from(es) < kConditionLimit)) continue;  // face unsolvable, skip
      // Stationarity with the sum constraint: 2Qs·w - qs = μ1.
      Eigen::VectorXd p = spectral_solve(es, qs);
      Eigen::VectorXd r = spectral_solve(es, Eigen::VectorXd::Ones(m));
      double r_sum = r.sum();
      if (r_sum == 0.0 || !std::isfinite(r_sum)) continue;
      double mu = (2.0 - p.sum()) / r_sum;
      w_sub = 0.5 * (p + mu * r);
    }

    bool feasible = true;
    for (int r = 0; r < m; ++r) {
      if (!(w_sub(r) >= -kFeasibilityTolerance) || !std::isfinite(w_sub(r))) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    Eigen::VectorXd w = Eigen::VectorXd::Zero(k);
    for (int r = 0; r < m; ++r) w(idx[static_cast<std::size_t>(r)]) = w_sub(r);
    double obj = objective(w);
    if (!std::isfinite(obj)) continue;

    bool take = false;
    if (!found || obj < best_obj - kTieTolerance) {
      take = true;
    } else if (obj <= best_obj + kTieTolerance) {
      int best_m = __builtin_popcount(best_mask);
      if (m > best_m) take = true;
      else if (m == best_m && support_lex_less(mask, best_mask)) take = true;
    }
    if (take) {
      found = true;
      best_obj = obj;
      best_mask = mask;
      best_w = w;
    }
  }

  if (!found) throw Error("simplex_qp: no feasible stationary candidate");
  return std::vector<double>(best_w.data(), best_w.data() + best_w.size());
}

WeightVector solve_weights_convex(const Eigen::MatrixXd& sigma) {
  WeightVector out;
  out.mode = WeightMode::convex;
  out.weights = simplex_qp(sigma, Eigen::VectorXd::Zero(sigma.rows()));
  return out;
}

double AveragedEstimator::eval(double x) const {
  // Accumulates in expert order, matching the grid overload term for term.
  double acc = 0.0;
  for (std::size_t i = 0; i < experts.size(); ++i)
    acc += weights[i] * kde_eval(experts[i], x);
  return acc;
}

std::vector<double> AveragedEstimator::eval(std::span<const double> xs) const {
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t i = 0; i < experts.size(); ++i) {
    std::vector<double> vals = kde_eval(experts[i], xs);
    for (std::size_t p = 0; p < xs.size(); ++p) out[p] += weights[i] * vals[p];
  }
  return out;
}

double AveragedEstimator::max_bandwidth() const {
  double m = 0.0;
  for (const KdeSpec& e : experts) m = std::max(m, e.bandwidth);
  return m;
}

AveragedEstimator average_estimator(const SamplePtr& sample, const BandwidthSet& bandwidths,
                                    WeightMode mode) {
  if (bandwidths.size() < 2 || bandwidths.size() > BandwidthSet::max_size)
    throw std::invalid_argument("average_estimator: need between 2 and 8 bandwidths");
  if (!sample || sample->size() < 4)
    throw std::invalid_argument("average_estimator: need at least 4 observations");

  SigmaModel model = build_sigma_model(sample->size(), bandwidths, sample);
  if (!(model.condition_estimate < kConditionLimit))
    throw SingularMatrixError("average_estimator: sigma numerically singular",
                              model.condition_estimate);

  WeightVector wv = mode == WeightMode::linear ? solve_weights_linear(model.sigma)
                                               : solve_weights_convex(model.sigma);

  AveragedEstimator out;
  out.weights = std::move(wv.weights);
  out.experts.reserve(bandwidths.size());
  for (std::size_t i = 0; i < bandwidths.size(); ++i)
    out.experts.push_back({sample, bandwidths[i].h});
  out.diagnostics = {model.gamma_hat, model.pilot_bandwidth, model.gamma_fallback,
                     model.condition_estimate};
  return out;
}

}  // namespace avkde
