#include "polid/conf/importance.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace polid {

namespace {

std::atomic<std::uint64_t> g_op_count{0};

void check_supported(const ConfMdp& env) {
  if (env.transition_depends_on_config())
    throw std::logic_error(
        "importance weighting: transition-configurable environments are not supported");
}

}  // namespace

std::uint64_t configuration_op_count() { return g_op_count.load(); }
void reset_configuration_op_count() { g_op_count.store(0); }

double importance_weight(const Trajectory& traj, const ConfMdp& env, const Vec& omega,
                         const Vec& omega0, int prefix_len, bool* zero_support) {
  g_op_count.fetch_add(1, std::memory_order_relaxed);
  check_supported(env);
  if (traj.length() == 0) throw std::invalid_argument("importance_weight: empty trajectory");
  if (prefix_len < 0 || prefix_len > static_cast<int>(traj.length()))
    throw std::invalid_argument("importance_weight: prefix length out of range");
  if (zero_support) *zero_support = false;

  double log_num;
  try {
    log_num = env.log_init_density(omega, traj.states.front());
  } catch (const std::invalid_argument&) {
    log_num = -std::numeric_limits<double>::infinity();
  }
  const double log_den = env.log_init_density(omega0, traj.states.front());
  if (!std::isfinite(log_num)) {
    if (zero_support) *zero_support = true;
    return 0.0;
  }
  // Transition ratios are 1 by the support check above.
  return std::exp(log_num - log_den);
}

Vec off_dist_gradient(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                      const Vec& theta, const ConfMdp& env, const Vec& omega, const Vec& omega0,
                      double gamma) {
  g_op_count.fetch_add(1, std::memory_order_relaxed);
  check_supported(env);
  if (trajectories.empty()) throw std::invalid_argument("off_dist_gradient: no trajectories");

  const int d = policy.param_dim();
  Vec grad(d, 0.0);
  Vec score(d);
  bool any_weight = false;
  for (const auto& traj : trajectories) {
    score.assign(d, 0.0);
    double g = 1.0;
    for (std::size_t t = 0; t < traj.length(); ++t) {
      const double w = importance_weight(traj, env, omega, omega0, static_cast<int>(t));
      if (w > 0.0) any_weight = true;
      axpy(1.0, policy.grad_log_prob(theta, traj.states[t], traj.actions[t]), score);
      axpy(g * traj.rewards[t] * w, score, grad);
      g *= gamma;
    }
  }
  if (!any_weight)
    throw std::runtime_error("off_dist_gradient: every importance weight is zero; omega is too "
                             "far from the collection configuration");
  const double inv_n = 1.0 / static_cast<double>(trajectories.size());
  for (double& v : grad) v *= inv_n;
  return grad;
}

double renyi2_hat(const std::vector<Trajectory>& trajectories, const ConfMdp& env,
                  const Vec& omega, const Vec& omega0) {
  g_op_count.fetch_add(1, std::memory_order_relaxed);
  check_supported(env);
  if (trajectories.empty()) throw std::invalid_argument("renyi2_hat: no trajectories");
  double sum = 0.0;
  for (const auto& traj : trajectories) {
    const double w =
        importance_weight(traj, env, omega, omega0, static_cast<int>(traj.length()));
    sum += w * w;
  }
  return sum / static_cast<double>(trajectories.size());
}

double config_objective(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                        const Vec& theta, const ConfMdp& env, const Vec& omega, const Vec& omega0,
                        const IndexSet& target, double zeta) {
  g_op_count.fetch_add(1, std::memory_order_relaxed);
  if (target.empty()) throw std::invalid_argument("config_objective: empty target set");
  if (zeta < 0.0) throw std::invalid_argument("config_objective: zeta must be non-negative");
  target.validate(policy.param_dim());

  const Vec grad = off_dist_gradient(trajectories, policy, theta, env, omega, omega0,
                                     env.discount());
  double restricted2 = 0.0;
  for (int i : target) restricted2 += grad[i] * grad[i];
  const double penalty =
      zeta * std::sqrt(renyi2_hat(trajectories, env, omega, omega0) /
                       static_cast<double>(trajectories.size()));
  return restricted2 - penalty;
}

}  // namespace polid
