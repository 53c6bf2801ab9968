#include "polid/policies/gaussian_linear.hpp"

#include <cmath>
#include <numbers>

#include "polid/estimation/dataset.hpp"

namespace polid {

namespace {

Mat invert_spd(const Mat& a) {
  const int n = a.rows();
  Mat inv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0.0);
    e[j] = 1.0;
    Vec col = cholesky_solve(a, e);
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

}  // namespace

GaussianLinearPolicy::GaussianLinearPolicy(FeatureMap features, Mat covariance)
    : features_(std::move(features)), action_dim_(covariance.rows()), sigma_(std::move(covariance)) {
  if (sigma_.rows() != sigma_.cols())
    throw std::invalid_argument("GaussianLinearPolicy: covariance must be square");
  sigma_min_eig_ = min_eigenvalue_sym(sigma_);
  if (!(sigma_min_eig_ > 0.0))
    throw std::invalid_argument("GaussianLinearPolicy: covariance must be positive definite");
  sigma_inv_ = invert_spd(sigma_);
  sigma_chol_ = sigma_;
  cholesky_factor(sigma_chol_);
  log_det_sigma_ = 0.0;
  for (int i = 0; i < action_dim_; ++i) log_det_sigma_ += 2.0 * std::log(sigma_chol_(i, i));
}

GaussianLinearPolicy::GaussianLinearPolicy(FeatureMap features, double variance)
    : GaussianLinearPolicy(std::move(features), [&] {
        Mat s(1, 1);
        s(0, 0) = variance;
        return s;
      }()) {}

Vec GaussianLinearPolicy::mean_action(const Vec& theta, const State& s) const {
  check_theta(theta);
  const Vec phi = features_.evaluate(s);
  const int q = features_.output_dim;
  Vec mu(action_dim_, 0.0);
  for (int i = 0; i < action_dim_; ++i) {
    double m = 0.0;
    for (int j = 0; j < q; ++j) m += theta[i * q + j] * phi[j];
    mu[i] = m;
  }
  return mu;
}

double GaussianLinearPolicy::log_prob(const Vec& theta, const State& s, const Action& a) const {
  if (static_cast<int>(a.size()) != action_dim_)
    throw std::invalid_argument("GaussianLinearPolicy: action dimension mismatch");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("GaussianLinearPolicy: non-finite action");
  const Vec mu = mean_action(theta, s);
  Vec r(action_dim_);
  for (int i = 0; i < action_dim_; ++i) r[i] = a[i] - mu[i];
  const Vec sr = sigma_inv_.multiply(r);
  const double quad = dot(r, sr);
  return -0.5 * action_dim_ * std::log(2.0 * std::numbers::pi) - 0.5 * log_det_sigma_ -
         0.5 * quad;
}

Vec GaussianLinearPolicy::grad_log_prob(const Vec& theta, const State& s, const Action& a) const {
  // Sigma^{-1}(a - Theta phi) kron phi, written out directly.
  const Vec mu = mean_action(theta, s);
  const Vec phi = features_.evaluate(s);
  const int q = features_.output_dim;
  Vec r(action_dim_);
  for (int i = 0; i < action_dim_; ++i) r[i] = a[i] - mu[i];
  const Vec sr = sigma_inv_.multiply(r);
  Vec g(param_dim());
  for (int i = 0; i < action_dim_; ++i)
    for (int j = 0; j < q; ++j) g[i * q + j] = sr[i] * phi[j];
  return g;
}

Action GaussianLinearPolicy::sample_action(const Vec& theta, const State& s, SeededRng& rng) const {
  Vec mu = mean_action(theta, s);
  Vec z(action_dim_);
  for (int i = 0; i < action_dim_; ++i) z[i] = rng.normal();
  for (int i = 0; i < action_dim_; ++i) {
    double v = 0.0;
    for (int j = 0; j <= i; ++j) v += sigma_chol_(i, j) * z[j];
    mu[i] += v;
  }
  return mu;
}

Vec GaussianLinearPolicy::sufficient_statistic(const State& s, const Action& a) const {
  const Vec phi = features_.evaluate(s);
  const Vec sa = sigma_inv_.multiply(a);
  const int q = features_.output_dim;
  Vec t(param_dim());
  for (int i = 0; i < action_dim_; ++i)
    for (int j = 0; j < q; ++j) t[i * q + j] = sa[i] * phi[j];
  return t;
}

Vec GaussianLinearPolicy::mean_sufficient_statistic(const Vec& theta, const State& s) const {
  return sufficient_statistic(s, mean_action(theta, s));
}

Mat GaussianLinearPolicy::fisher_state(const Vec& theta, const State& s) const {
  check_theta(theta);
  const Vec phi = features_.evaluate(s);
  return kron(sigma_inv_, outer(phi, phi));
}

double GaussianLinearPolicy::subgaussian_parameter() const {
  if (!features_.has_finite_bound())
    throw std::logic_error("subgaussian_parameter: feature map declares no finite bound");
  return features_.bound / std::sqrt(sigma_min_eig_);
}

void GaussianLinearPolicy::normal_equations(const DemoDataset& data, Mat& m, Vec& b) const {
  const int q = features_.output_dim;
  const int d = param_dim();
  Mat phi_outer(q, q);
  b.assign(d, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Vec phi = features_.evaluate(data.states[i]);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c) phi_outer(r, c) += phi[r] * phi[c];
    axpy(1.0, sufficient_statistic(data.states[i], data.actions[i]), b);
  }
  m = kron(sigma_inv_, phi_outer);
}

}  // namespace polid
