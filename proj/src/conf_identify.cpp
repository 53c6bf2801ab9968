#include "polid/conf/conf_identify.hpp"

#include <cmath>
#include <cstring>
#include <unordered_map>

#include "polid/adam.hpp"

namespace polid {

namespace {

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (double x : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &x, sizeof(bits));
      h = (h ^ bits) * 1099511628211ULL;
    }
    return h;
  }
};

// Everything omega-independent in the objective, grouped by distinct
// initial state: the summed target-restricted gradient contributions
// and the weight multiplicities.
struct AscentCache {
  std::vector<State> initial_states;
  Vec log_den;                 // init density under the collection omega
  Vec counts;
  std::vector<Vec> grad_sums;  // per unique s0, length |target|
  std::size_t n = 0;
  int target_size = 0;
};

AscentCache build_ascent_cache(const std::vector<Trajectory>& trajs, const PolicyModel& policy,
                               const Vec& theta, const ConfMdp& env, const Vec& omega0,
                               const IndexSet& target) {
  AscentCache cache;
  cache.n = trajs.size();
  cache.target_size = target.size();
  const double gamma = env.discount();
  const int d = policy.param_dim();

  std::unordered_map<Vec, int, VecHash> index;
  Vec score(d);
  for (const auto& traj : trajs) {
    if (traj.length() == 0) throw std::invalid_argument("ascend_configuration: empty trajectory");
    if (traj.collected_under != omega0)
      throw std::invalid_argument(
          "ascend_configuration: trajectories were not collected under omega0");
    auto [it, inserted] = index.try_emplace(traj.states.front(),
                                            static_cast<int>(cache.initial_states.size()));
    if (inserted) {
      cache.initial_states.push_back(traj.states.front());
      cache.counts.push_back(0.0);
      cache.grad_sums.emplace_back(target.size(), 0.0);
    }
    const int u = it->second;
    cache.counts[u] += 1.0;

    score.assign(d, 0.0);
    double g = 1.0;
    Vec contribution(target.size(), 0.0);
    for (std::size_t t = 0; t < traj.length(); ++t) {
      axpy(1.0, policy.grad_log_prob(theta, traj.states[t], traj.actions[t]), score);
      const double c = g * traj.rewards[t];
      int j = 0;
      for (int coord : target) contribution[j++] += c * score[coord];
      g *= gamma;
    }
    axpy(1.0, contribution, cache.grad_sums[u]);
  }
  cache.log_den = env.log_init_density_batch(omega0, cache.initial_states);
  return cache;
}

double cached_objective(const AscentCache& cache, const ConfMdp& env, const Vec& omega,
                        double zeta) {
  Vec log_num;
  try {
    log_num = env.log_init_density_batch(omega, cache.initial_states);
  } catch (const std::exception&) {
    return -std::numeric_limits<double>::infinity();
  }
  Vec ghat(cache.target_size, 0.0);
  double sum_w2 = 0.0;
  for (std::size_t u = 0; u < cache.initial_states.size(); ++u) {
    const double w = std::exp(log_num[u] - cache.log_den[u]);
    axpy(w, cache.grad_sums[u], ghat);
    sum_w2 += cache.counts[u] * w * w;
  }
  const double inv_n = 1.0 / static_cast<double>(cache.n);
  double norm_sq = 0.0;
  for (double v : ghat) norm_sq += (v * inv_n) * (v * inv_n);
  const double renyi = sum_w2 * inv_n;
  return norm_sq - zeta * std::sqrt(renyi * inv_n);
}

}  // namespace

Vec ascend_configuration(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                         const Vec& theta, const ConfMdp& env, const Vec& omega0,
                         const IndexSet& target, const ConfigSearchSpec& spec) {
  if (env.transition_depends_on_config())
    throw std::logic_error(
        "ascend_configuration: transition-configurable environments are not supported");
  if (trajectories.empty())
    throw std::invalid_argument("ascend_configuration: no trajectories");
  target.validate(policy.param_dim());

  const AscentCache cache =
      build_ascent_cache(trajectories, policy, theta, env, omega0, target);
  const int p = env.config_dim();

  Vec omega = omega0;
  AdamState adam = AdamState::create(p, spec.ascent_learning_rate);
  Vec grad(p);

  Vec best_omega = omega;
  double best = cached_objective(cache, env, omega, spec.zeta);
  if (!std::isfinite(best))
    throw std::runtime_error("ascend_configuration: objective not finite at omega0");

  for (int step = 0; step < spec.ascent_steps; ++step) {
    for (int j = 0; j < p; ++j) {
      const double h = spec.fd_step * std::max(1.0, std::fabs(omega[j]));
      Vec plus = omega, minus = omega;
      plus[j] += h;
      minus[j] -= h;
      grad[j] = (cached_objective(cache, env, plus, spec.zeta) -
                 cached_objective(cache, env, minus, spec.zeta)) /
                (2.0 * h);
    }
    bool finite = true;
    for (double g : grad)
      if (!std::isfinite(g)) finite = false;
    if (!finite) break;

    adam_update(adam, omega, grad, +1);
    omega = env.clamp_config(std::move(omega));

    const double value = cached_objective(cache, env, omega, spec.zeta);
    if (!std::isfinite(value)) break;
    if (value > best) {
      best = value;
      best_omega = omega;
    }
  }
  return best_omega;
}

namespace {

IdentificationOutcome run_rule(const PolicyModel& policy, const DemoDataset& data, double delta,
                               RuleMode rule, const std::vector<IndexSet>* groups,
                               const GlrOptions& glr) {
  if (groups) {
    return rule == RuleMode::simplified
               ? identify_groups_simplified(policy, data, *groups, delta, glr)
               : identify_groups_combinatorial(policy, data, *groups, delta, glr);
  }
  return rule == RuleMode::simplified ? identify_simplified(policy, data, delta, glr)
                                      : identify_combinatorial(policy, data, delta, glr);
}

IndexSet covered_units(const IdentificationOutcome& outcome) {
  IndexSet covered;
  for (const auto& sel : outcome.selected_sets) covered = covered.union_with(sel);
  return covered;
}

ConfIdentifyResult conf_identify_impl(const ConfMdp& env, const PolicyModel& policy, double delta,
                                      const ConfigSearchSpec& spec, RuleMode rule,
                                      const std::vector<IndexSet>* groups, SeededRng& rng) {
  const int n_units =
      groups ? static_cast<int>(groups->size()) : policy.param_dim();

  ConfIdentifyResult result;
  Vec omega0 = env.default_config();

  SeededRng train_rng = rng.split(1);
  SeededRng collect_rng = rng.split(2);

  TrainSpec agent_spec = spec.agent;
  agent_spec.gamma = env.discount();
  Vec theta = train_policy(env, policy, agent_spec, omega0, train_rng).theta;

  std::vector<Trajectory> trajs =
      collect_trajectories(env, policy, theta, omega0, spec.episodes, collect_rng);
  result.baseline = run_rule(policy, flatten(trajs), delta, rule, groups, spec.glr);
  result.outcome = result.baseline;

  IndexSet selected = covered_units(result.baseline);
  DemoDataset pooled = flatten(trajs);

  for (int unit = 0; unit < n_units; ++unit) {
    if (selected.contains(unit)) continue;
    Vec omega = omega0;
    std::vector<Trajectory> current = trajs;

    for (int attempt = 1; attempt <= spec.attempts_per_unit; ++attempt) {
      ConfRound round;
      round.unit = unit;
      round.attempt = attempt;

      const IndexSet target = groups ? (*groups)[unit] : IndexSet{unit};
      Vec omega_next;
      try {
        omega_next = ascend_configuration(current, policy, theta, env, omega, target, spec);
      } catch (const std::exception&) {
        round.aborted = true;
        result.rounds.push_back(std::move(round));
        break;
      }
      round.omega = omega_next;
      round.objective = config_objective(current, policy, theta, env, omega_next, omega,
                                         target, spec.zeta);

      theta = train_policy(env, policy, agent_spec, omega_next, train_rng, &theta).theta;
      current = collect_trajectories(env, policy, theta, omega_next, spec.episodes, collect_rng);

      DemoDataset data;
      if (spec.pool_datasets) {
        const DemoDataset fresh = flatten(current);
        for (std::size_t i = 0; i < fresh.size(); ++i)
          pooled.push(fresh.states[i], fresh.actions[i]);
        data = pooled;
      } else {
        data = flatten(current);
      }

      const IdentificationOutcome round_outcome =
          run_rule(policy, data, delta, rule, groups, spec.glr);
      const IndexSet before = selected;
      selected = selected.union_with(covered_units(round_outcome));
      std::vector<int> fresh_units;
      for (int u : selected)
        if (!before.contains(u)) fresh_units.push_back(u);
      round.newly_selected = IndexSet(std::move(fresh_units));

      if (rule == RuleMode::combinatorial) {
        for (const auto& accepted : round_outcome.selected_sets) {
          bool known = false;
          for (const auto& have : result.outcome.selected_sets)
            if (have == accepted) known = true;
          if (!known) result.outcome.selected_sets.push_back(accepted);
        }
      }
      result.rounds.push_back(std::move(round));
      omega = omega_next;
      if (selected.contains(unit)) break;
    }
    result.final_omega = omega;
  }

  if (rule == RuleMode::simplified) result.outcome.selected_sets = {selected};
  if (result.final_omega.empty()) result.final_omega = omega0;
  result.final_theta = theta;
  return result;
}

}  // namespace

ConfIdentifyResult identify_with_configuration(const ConfMdp& env, const PolicyModel& policy,
                                               double delta, const ConfigSearchSpec& spec,
                                               RuleMode rule, SeededRng& rng) {
  return conf_identify_impl(env, policy, delta, spec, rule, nullptr, rng);
}

ConfIdentifyResult identify_with_configuration_grouped(const ConfMdp& env,
                                                       const PolicyModel& policy, double delta,
                                                       const ConfigSearchSpec& spec, RuleMode rule,
                                                       const std::vector<IndexSet>& groups,
                                                       SeededRng& rng) {
  return conf_identify_impl(env, policy, delta, spec, rule, &groups, rng);
}

}  // namespace polid
