// Maximum-likelihood fitting over a free coordinate set, with the
// complement pinned to zero. Gaussian linear policies solve the normal
// equations in closed form; everything else runs full-batch Adam.
#pragma once

#include "polid/estimation/dataset.hpp"
#include "polid/policies/policy.hpp"

namespace polid {

struct FitOptions {
  double learning_rate = 0.03;
  int max_iterations = 1000;
  double grad_tolerance = 1e-6;  // on the projected gradient of the mean NLL
  double ridge = 1e-9;           // fallback for singular normal equations
};

struct FitReport {
  Vec theta_hat;
  double nll = 0.0;  // -sum_i log pi(a_i|s_i) at theta_hat
  double grad_norm_at_solution = 0.0;
  int iterations = 0;
  bool converged = false;
  bool degenerate_design = false;
};

// -sum_i log pi_theta(a_i|s_i); throws on an empty dataset.
double neg_log_likelihood(const PolicyModel& policy, const Vec& theta, const DemoDataset& data);

FitReport mle_fit(const PolicyModel& policy, const DemoDataset& data, const IndexSet& free,
                  const FitOptions& opts = {});

// Average of fisher_state over the given states.
Mat empirical_fim(const PolicyModel& policy, const Vec& theta, const std::vector<State>& states);

}  // namespace polid
