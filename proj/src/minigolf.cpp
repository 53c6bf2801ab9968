#include "polid/envs/minigolf.hpp"

#include <algorithm>
#include <cmath>

namespace polid {

Minigolf::Minigolf(int horizon, double gamma) : horizon_(horizon), gamma_(gamma) {
  if (horizon_ < 1) throw std::invalid_argument("Minigolf: horizon must be positive");
  if (!(gamma_ > 0.0 && gamma_ <= 1.0))
    throw std::invalid_argument("Minigolf: discount must lie in (0,1]");
}

State Minigolf::reset(const Vec& omega, SeededRng& rng) const {
  check_config(omega);
  if (omega[0] < kPutterLo || omega[0] > kPutterHi)
    throw std::invalid_argument("Minigolf: putter length out of range");
  return {rng.uniform(0.0, kMaxDistance), rng.uniform(kFrictionLo, kFrictionHi)};
}

StepResult Minigolf::step(const State& s, const Action& a, const Vec& omega, SeededRng&) const {
  check_config(omega);
  if (a.size() != 1 || !std::isfinite(a[0]))
    throw std::invalid_argument("Minigolf: action must be a finite scalar force");

  const double x = s[0];
  const double f = s[1];
  const double force = std::clamp(a[0], 0.0, kMaxForce);
  const double v = omega[0] * force;
  const double deceleration = (5.0 / 7.0) * f * 9.81;
  const double travel = v * v / (2.0 * deceleration);

  StepResult out;
  if (travel > x + kHoleSize) {
    out.next = {0.0, f};
    out.reward = -100.0;
    out.done = true;
  } else if (travel >= x) {
    out.next = {0.0, f};
    out.reward = 0.0;
    out.done = true;
  } else {
    out.next = {x - travel, f};
    out.reward = -1.0;
  }
  return out;
}

double Minigolf::log_init_density(const Vec& omega, const State& s0) const {
  check_config(omega);
  if (s0.size() != 2) throw std::invalid_argument("Minigolf: bad state");
  if (s0[0] < 0.0 || s0[0] > kMaxDistance || s0[1] < kFrictionLo || s0[1] > kFrictionHi)
    throw std::invalid_argument("Minigolf: state outside the initial support");
  // Independent uniforms; omega only affects transitions.
  return -std::log(kMaxDistance) - std::log(kFrictionHi - kFrictionLo);
}

FeatureMap Minigolf::features() const {
  FeatureMap fm;
  fm.output_dim = 6;
  const double x = kMaxDistance, f = kFrictionHi;
  fm.bound = std::sqrt(1.0 + x * x + f * f + x + f + x * f);
  fm.evaluate = [](const State& s) {
    const double x = s[0], f = s[1];
    if (x < 0.0 || f < 0.0) throw std::invalid_argument("Minigolf features: negative inputs");
    return Vec{1.0, x, f, std::sqrt(x), std::sqrt(f), std::sqrt(x * f)};
  };
  return fm;
}

}  // namespace polid
