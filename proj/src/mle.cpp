#include "polid/estimation/mle.hpp"

#include <cmath>

#include "polid/adam.hpp"

namespace polid {

double neg_log_likelihood(const PolicyModel& policy, const Vec& theta, const DemoDataset& data) {
  data.validate();
  double nll = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i)
    nll -= policy.log_prob(theta, data.states[i], data.actions[i]);
  return nll;
}

namespace {

FitReport fit_closed_form(const PolicyModel& policy, const DemoDataset& data,
                          const IndexSet& free, const FitOptions& opts) {
  const int d = policy.param_dim();
  Mat m;
  Vec b;
  policy.normal_equations(data, m, b);

  const auto& idx = free.indices();
  const int f = free.size();
  Mat mf(f, f);
  Vec bf(f);
  for (int r = 0; r < f; ++r) {
    bf[r] = b[idx[r]];
    for (int c = 0; c < f; ++c) mf(r, c) = m(idx[r], idx[c]);
  }

  FitReport report;
  Mat trial = mf;
  if (!cholesky_factor(trial)) {
    report.degenerate_design = true;
    for (int r = 0; r < f; ++r) mf(r, r) += opts.ridge;
  }
  const Vec xf = cholesky_solve(mf, bf);

  report.theta_hat.assign(d, 0.0);
  for (int r = 0; r < f; ++r) report.theta_hat[idx[r]] = xf[r];
  report.nll = neg_log_likelihood(policy, report.theta_hat, data);
  // Residual of the normal equations on the free coordinates.
  const Vec mx = m.multiply(report.theta_hat);
  double g2 = 0.0;
  for (int r = 0; r < f; ++r) {
    const double g = (mx[idx[r]] - b[idx[r]]) / static_cast<double>(data.size());
    g2 += g * g;
  }
  report.grad_norm_at_solution = std::sqrt(g2);
  report.iterations = 0;
  report.converged = !report.degenerate_design;
  return report;
}

FitReport fit_iterative(const PolicyModel& policy, const DemoDataset& data, const IndexSet& free,
                        const FitOptions& opts) {
  const int d = policy.param_dim();
  const auto nll = policy.make_nll(data);

  std::vector<char> is_free(d, 0);
  for (int j : free) is_free[j] = 1;

  // Null-hypothesis-consistent start.
  Vec theta(d, 0.0);
  Vec grad(d, 0.0);
  AdamState adam = AdamState::create(d, opts.learning_rate);

  FitReport report;
  double gnorm = 0.0;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    nll->value_and_grad(theta, grad);
    for (int j = 0; j < d; ++j)
      if (!is_free[j]) grad[j] = 0.0;
    gnorm = norm2(grad);
    if (gnorm <= opts.grad_tolerance) break;
    adam_update(adam, theta, grad, -1);
    for (int j = 0; j < d; ++j)
      if (!is_free[j]) theta[j] = 0.0;
  }

  report.theta_hat = std::move(theta);
  report.grad_norm_at_solution = gnorm;
  report.iterations = it;
  report.converged = gnorm <= opts.grad_tolerance;
  report.nll = nll->value(report.theta_hat) * static_cast<double>(nll->sample_count());
  return report;
}

}  // namespace

FitReport mle_fit(const PolicyModel& policy, const DemoDataset& data, const IndexSet& free,
                  const FitOptions& opts) {
  data.validate();
  free.validate(policy.param_dim());

  if (free.empty()) {
    FitReport report;
    report.theta_hat.assign(policy.param_dim(), 0.0);
    report.nll = neg_log_likelihood(policy, report.theta_hat, data);
    report.converged = true;
    return report;
  }
  if (policy.has_quadratic_nll()) return fit_closed_form(policy, data, free, opts);
  return fit_iterative(policy, data, free, opts);
}

Mat empirical_fim(const PolicyModel& policy, const Vec& theta, const std::vector<State>& states) {
  if (states.empty()) throw std::invalid_argument("empirical_fim: no states");
  const int d = policy.param_dim();
  Mat fim(d, d);
  for (const auto& s : states) fim.add_scaled(policy.fisher_state(theta, s), 1.0);
  const double inv_n = 1.0 / static_cast<double>(states.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) fim(i, j) *= inv_n;
  return fim;
}

}  // namespace polid
