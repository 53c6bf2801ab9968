#include "polid/learn/gpomdp.hpp"

#include <cmath>

#include "polid/adam.hpp"

namespace polid {

double Trajectory::discounted_return(double gamma) const {
  double g = 1.0, total = 0.0;
  for (double r : rewards) {
    total += g * r;
    g *= gamma;
  }
  return total;
}

std::vector<Trajectory> collect_trajectories(const ConfMdp& env, const PolicyModel& policy,
                                             const Vec& theta, const Vec& omega, int count,
                                             SeededRng& rng) {
  if (count < 1) throw std::invalid_argument("collect_trajectories: count must be positive");
  std::vector<Trajectory> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Trajectory traj;
    traj.collected_under = omega;
    State s = env.reset(omega, rng);
    for (int t = 0; t < env.horizon(); ++t) {
      Action a = policy.sample_action(theta, s, rng);
      StepResult res = env.step(s, a, omega, rng);
      traj.states.push_back(std::move(s));
      traj.actions.push_back(std::move(a));
      traj.rewards.push_back(res.reward);
      s = std::move(res.next);
      if (res.done) {
        traj.done_early = true;
        break;
      }
    }
    out.push_back(std::move(traj));
  }
  return out;
}

DemoDataset flatten(const std::vector<Trajectory>& trajectories) {
  DemoDataset data;
  for (const auto& traj : trajectories) {
    if (!traj.collected_under.empty() && data.source_config.empty())
      data.source_config = traj.collected_under;
    for (std::size_t t = 0; t < traj.length(); ++t) data.push(traj.states[t], traj.actions[t]);
  }
  return data;
}

Vec gpomdp_gradient(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                    const Vec& theta, double gamma) {
  if (trajectories.empty()) throw std::invalid_argument("gpomdp_gradient: no trajectories");
  const int d = policy.param_dim();
  Vec grad(d, 0.0);
  Vec score(d);
  for (const auto& traj : trajectories) {
    score.assign(d, 0.0);
    double g = 1.0;
    for (std::size_t t = 0; t < traj.length(); ++t) {
      axpy(1.0, policy.grad_log_prob(theta, traj.states[t], traj.actions[t]), score);
      axpy(g * traj.rewards[t], score, grad);
      g *= gamma;
    }
  }
  const double inv_n = 1.0 / static_cast<double>(trajectories.size());
  for (double& v : grad) v *= inv_n;
  return grad;
}

TrainResult train_policy(const ConfMdp& env, const PolicyModel& policy, const TrainSpec& spec,
                         const Vec& omega, SeededRng& rng, const Vec* warm_start) {
  if (spec.steps < 0 || spec.batch < 1) throw std::invalid_argument("train_policy: bad spec");
  const int d = policy.param_dim();
  spec.free.validate(d);

  std::vector<char> is_free(d, 0);
  for (int j : spec.free) is_free[j] = 1;

  TrainResult result;
  result.theta.assign(d, 0.0);
  if (warm_start) {
    if (static_cast<int>(warm_start->size()) != d)
      throw std::invalid_argument("train_policy: warm start dimension mismatch");
    result.theta = *warm_start;
    for (int j = 0; j < d; ++j)
      if (!is_free[j]) result.theta[j] = 0.0;
  }
  if (spec.free.empty()) return result;

  AdamState adam = AdamState::create(d, spec.learning_rate);
  for (int step = 0; step < spec.steps; ++step) {
    const auto batch = collect_trajectories(env, policy, result.theta, omega, spec.batch, rng);
    double mean_return = 0.0;
    for (const auto& traj : batch) mean_return += traj.discounted_return(spec.gamma);
    result.mean_returns.push_back(mean_return / static_cast<double>(batch.size()));

    Vec grad = gpomdp_gradient(batch, policy, result.theta, spec.gamma);
    for (int j = 0; j < d; ++j)
      if (!is_free[j]) grad[j] = 0.0;
    adam_update(adam, result.theta, grad, +1);
    for (int j = 0; j < d; ++j)
      if (!is_free[j]) result.theta[j] = 0.0;

    if (norm2(result.theta) > 1e6)
      throw std::runtime_error("train_policy: parameters diverged past 1e6");
  }
  return result;
}

}  // namespace polid
