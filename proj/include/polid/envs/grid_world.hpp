// 5x5 grid world. The agent walks toward a goal cell; both the agent
// start cell and the goal cell are drawn from a product of Boltzmann
// distributions whose logits are the configuration omega (25 agent
// logits followed by 25 goal logits).
//
// State: (agent_row, agent_col, goal_row, goal_col). Reward 1 on
// reaching the goal (episode ends), 0 otherwise; moves clip at walls.
//
// Features are binary row/column indicators for agent and goal with the
// last row and column left implicit: q = 16.
#pragma once

#include "polid/envs/conf_mdp.hpp"

namespace polid {

class DiscreteGridWorld : public ConfMdp {
public:
  static constexpr int kSize = 5;
  static constexpr int kCells = kSize * kSize;

  // Env actions: 0 = up, 1 = right, 2 = down, 3 = left.
  static constexpr int kActions = 4;

  DiscreteGridWorld(int horizon = 50, double gamma = 0.98);

  int state_dim() const override { return 4; }
  int horizon() const override { return horizon_; }
  double discount() const override { return gamma_; }

  int config_dim() const override { return 2 * kCells; }
  Vec default_config() const override { return Vec(2 * kCells, 0.0); }
  bool transition_depends_on_config() const override { return false; }

  State reset(const Vec& omega, SeededRng& rng) const override;
  StepResult step(const State& s, const Action& a, const Vec& omega,
                  SeededRng& rng) const override;
  double log_init_density(const Vec& omega, const State& s0) const override;
  Vec log_init_density_batch(const Vec& omega, const std::vector<State>& states) const override;

  // Row/column indicators (agent row, agent col, goal row, goal col),
  // omitting the last row and column of each block.
  FeatureMap features() const;

private:
  int horizon_;
  double gamma_;
};

}  // namespace polid
