// Trajectory collection and G(PO)MDP policy-gradient training with the
// gradient projected onto a free coordinate set.
#pragma once

#include "polid/envs/conf_mdp.hpp"
#include "polid/estimation/dataset.hpp"
#include "polid/policies/policy.hpp"

namespace polid {

struct Trajectory {
  std::vector<State> states;    // s_0 .. s_{T-1}
  std::vector<Action> actions;  // a_0 .. a_{T-1}
  Vec rewards;                  // r_0 .. r_{T-1}
  Vec collected_under;          // omega
  bool done_early = false;

  std::size_t length() const { return states.size(); }
  double discounted_return(double gamma) const;
};

std::vector<Trajectory> collect_trajectories(const ConfMdp& env, const PolicyModel& policy,
                                             const Vec& theta, const Vec& omega, int count,
                                             SeededRng& rng);

DemoDataset flatten(const std::vector<Trajectory>& trajectories);

// (1/n) sum_i sum_t gamma^t r_{i,t} sum_{j<=t} grad log pi(a_{i,j}|s_{i,j})
Vec gpomdp_gradient(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                    const Vec& theta, double gamma);

struct TrainSpec {
  int steps = 200;
  int batch = 250;
  double learning_rate = 0.05;
  IndexSet free;
  double gamma = 0.99;
};

struct TrainResult {
  Vec theta;
  Vec mean_returns;  // mean discounted batch return per step
};

// Adam ascent on the G(PO)MDP gradient; pinned coordinates stay exactly
// zero throughout. Starts from warm_start when given, zero otherwise.
TrainResult train_policy(const ConfMdp& env, const PolicyModel& policy, const TrainSpec& spec,
                         const Vec& omega, SeededRng& rng, const Vec* warm_start = nullptr);

}  // namespace polid
