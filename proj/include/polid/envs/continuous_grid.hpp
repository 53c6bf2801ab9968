// Continuous grid world on [0,1]^2. Agent and goal positions start from
// per-coordinate truncated Gaussians whose means are the configuration
// omega = (agent_x, agent_y, goal_x, goal_y); the agent moves by a 2-D
// velocity action and must enter a fixed-radius circle around the goal.
//
// Features: two 5x5 lattices of radial basis functions, one over the
// agent position and one over the goal position (q = 50).
#pragma once

#include "polid/envs/conf_mdp.hpp"

namespace polid {

class ContinuousGridWorld : public ConfMdp {
public:
  static constexpr int kRbfPerAxis = 5;
  static constexpr double kRbfBandwidth = 0.25;  // lattice spacing
  static constexpr double kInitStddev = 0.1;
  static constexpr double kGoalRadius = 0.15;
  static constexpr double kMaxStep = 0.1;  // per-component velocity clip

  ContinuousGridWorld(int horizon = 50, double gamma = 0.98);

  int state_dim() const override { return 4; }
  int horizon() const override { return horizon_; }
  double discount() const override { return gamma_; }

  int config_dim() const override { return 4; }
  Vec default_config() const override { return {0.5, 0.5, 0.5, 0.5}; }
  bool transition_depends_on_config() const override { return false; }

  State reset(const Vec& omega, SeededRng& rng) const override;
  StepResult step(const State& s, const Action& a, const Vec& omega,
                  SeededRng& rng) const override;
  double log_init_density(const Vec& omega, const State& s0) const override;
  Vec clamp_config(Vec omega) const override;

  FeatureMap features() const;

private:
  int horizon_;
  double gamma_;
};

}  // namespace polid
