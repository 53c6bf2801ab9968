// Minigolf: repeatedly putt a ball toward the hole. State is (distance
// to hole, green friction); the scalar action is the putter force. The
// configuration omega is the putter length, which scales the force
// transferred to the ball, so it moves the transition model rather than
// the initial distribution.
//
// Ball physics: initial speed v = omega * force, constant deceleration
// (5/7) * friction * g, travel distance v^2 / (2 * deceleration). The
// hole captures when the ball stops inside [x, x + hole size]; rolling
// past it ends the episode with a large penalty; falling short costs
// one stroke and leaves the remaining distance.
#pragma once

#include "polid/envs/conf_mdp.hpp"

namespace polid {

class Minigolf : public ConfMdp {
public:
  static constexpr double kMaxDistance = 20.0;
  static constexpr double kFrictionLo = 0.065;
  static constexpr double kFrictionHi = 0.196;
  static constexpr double kHoleSize = 0.10;
  static constexpr double kMaxForce = 5.0;
  static constexpr double kPutterLo = 1.0;
  static constexpr double kPutterHi = 15.0;

  Minigolf(int horizon = 20, double gamma = 0.99);

  int state_dim() const override { return 2; }  // (x, friction)
  int horizon() const override { return horizon_; }
  double discount() const override { return gamma_; }

  int config_dim() const override { return 1; }
  Vec default_config() const override { return {5.0}; }
  bool transition_depends_on_config() const override { return true; }

  State reset(const Vec& omega, SeededRng& rng) const override;
  StepResult step(const State& s, const Action& a, const Vec& omega,
                  SeededRng& rng) const override;
  double log_init_density(const Vec& omega, const State& s0) const override;

  // (1, x, f, sqrt(x), sqrt(f), sqrt(x f))
  FeatureMap features() const;
  // Coordinates available to the friction-blind agent: (1, x, sqrt(x)).
  static std::vector<int> friction_blind_coordinates() { return {0, 1, 3}; }

private:
  int horizon_;
  double gamma_;
};

}  // namespace polid
