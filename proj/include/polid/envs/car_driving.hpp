// Simplified car driving on a constant-curvature road (an annulus
// segment). The agent observes its normalized speed and four distance
// sensors at angles -pi/4, -pi/6, pi/6, pi/4 from the heading, and acts
// on bounded (acceleration, steering). Reward is proportional to speed;
// leaving the road costs -1 and ends the episode, which otherwise ends
// on track completion or at the horizon.
//
// State layout: [v_norm, sensor1..sensor4 | r, chi, progress], where r
// is the radial distance from the road center, chi the heading relative
// to the local tangent, and progress the accumulated arc angle. Policies
// read the first five entries.
#pragma once

#include "polid/envs/conf_mdp.hpp"

namespace polid {

class CarDriving : public ConfMdp {
public:
  static constexpr int kObservationDim = 5;
  static constexpr double kRoadRadius = 10.0;
  static constexpr double kRoadHalfWidth = 2.0;
  static constexpr double kSensorRange = 10.0;
  static constexpr double kMaxSpeed = 1.0;
  static constexpr double kAccelPerStep = 0.05;
  static constexpr double kSteerPerStep = 0.2;
  static constexpr double kTargetProgress = 3.14159265358979323846;  // half circle

  CarDriving(int horizon = 250, double gamma = 0.996);

  int state_dim() const override { return 8; }
  int horizon() const override { return horizon_; }
  double discount() const override { return gamma_; }

  int config_dim() const override { return 0; }
  Vec default_config() const override { return {}; }
  bool transition_depends_on_config() const override { return false; }

  State reset(const Vec& omega, SeededRng& rng) const override;
  StepResult step(const State& s, const Action& a, const Vec& omega,
                  SeededRng& rng) const override;
  double log_init_density(const Vec& omega, const State& s0) const override;

  // Sensor angle offsets relative to the heading.
  static const std::vector<double>& sensor_angles();

private:
  State observe(double v, double r, double chi, double progress) const;

  int horizon_;
  double gamma_;
};

}  // namespace polid
