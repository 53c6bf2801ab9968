#include "polid/envs/continuous_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polid {

namespace {

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Truncated-to-[0,1] normal draw by inversion through rejection; the
// truncation mass is large (sigma = 0.1), so rejection is cheap.
double truncated_normal(double mean, double sigma, SeededRng& rng) {
  for (int i = 0; i < 1000; ++i) {
    const double x = mean + sigma * rng.normal();
    if (x >= 0.0 && x <= 1.0) return x;
  }
  return std::clamp(mean, 0.0, 1.0);
}

double log_truncated_normal_density(double x, double mean, double sigma) {
  if (x < 0.0 || x > 1.0) return -std::numeric_limits<double>::infinity();
  const double z = (x - mean) / sigma;
  const double mass = std_normal_cdf((1.0 - mean) / sigma) - std_normal_cdf((0.0 - mean) / sigma);
  return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(mass);
}

}  // namespace

ContinuousGridWorld::ContinuousGridWorld(int horizon, double gamma)
    : horizon_(horizon), gamma_(gamma) {
  if (horizon_ < 1) throw std::invalid_argument("ContinuousGridWorld: horizon must be positive");
  if (!(gamma_ > 0.0 && gamma_ <= 1.0))
    throw std::invalid_argument("ContinuousGridWorld: discount must lie in (0,1]");
}

State ContinuousGridWorld::reset(const Vec& omega, SeededRng& rng) const {
  check_config(omega);
  for (double m : omega)
    if (m < 0.0 || m > 1.0)
      throw std::invalid_argument("ContinuousGridWorld: config means must lie in [0,1]");
  State s(4);
  for (int i = 0; i < 4; ++i) s[i] = truncated_normal(omega[i], kInitStddev, rng);
  return s;
}

StepResult ContinuousGridWorld::step(const State& s, const Action& a, const Vec& omega,
                                     SeededRng&) const {
  check_config(omega);
  if (a.size() != 2) throw std::invalid_argument("ContinuousGridWorld: action must be 2-D");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("ContinuousGridWorld: non-finite action");

  StepResult out;
  out.next = s;
  out.next[0] = std::clamp(s[0] + std::clamp(a[0], -kMaxStep, kMaxStep), 0.0, 1.0);
  out.next[1] = std::clamp(s[1] + std::clamp(a[1], -kMaxStep, kMaxStep), 0.0, 1.0);

  const double dx = out.next[0] - s[2];
  const double dy = out.next[1] - s[3];
  const double dist = std::sqrt(dx * dx + dy * dy);
  if (dist <= kGoalRadius) {
    out.reward = 1.0;
    out.done = true;
  } else {
    // Distance shaping keeps the sparse goal reward learnable.
    out.reward = -dist;
  }
  return out;
}

double ContinuousGridWorld::log_init_density(const Vec& omega, const State& s0) const {
  check_config(omega);
  if (s0.size() != 4) throw std::invalid_argument("ContinuousGridWorld: bad state");
  double lp = 0.0;
  for (int i = 0; i < 4; ++i) lp += log_truncated_normal_density(s0[i], omega[i], kInitStddev);
  if (!std::isfinite(lp))
    throw std::invalid_argument("ContinuousGridWorld: state outside the unit square");
  return lp;
}

Vec ContinuousGridWorld::clamp_config(Vec omega) const {
  for (double& m : omega) m = std::clamp(m, 0.0, 1.0);
  return omega;
}

FeatureMap ContinuousGridWorld::features() const {
  FeatureMap fm;
  const int per_entity = kRbfPerAxis * kRbfPerAxis;
  fm.output_dim = 2 * per_entity;
  fm.bound = std::sqrt(2.0 * per_entity);  // each RBF is in (0,1]
  fm.evaluate = [per_entity](const State& s) {
    Vec phi(2 * per_entity);
    const double inv_two_bw2 = 1.0 / (2.0 * kRbfBandwidth * kRbfBandwidth);
    for (int e = 0; e < 2; ++e) {
      const double px = s[2 * e];
      const double py = s[2 * e + 1];
      int c = 0;
      for (int i = 0; i < kRbfPerAxis; ++i) {
        for (int j = 0; j < kRbfPerAxis; ++j, ++c) {
          const double cx = static_cast<double>(i) / (kRbfPerAxis - 1);
          const double cy = static_cast<double>(j) / (kRbfPerAxis - 1);
          const double d2 = (px - cx) * (px - cx) + (py - cy) * (py - cy);
          phi[e * per_entity + c] = std::exp(-d2 * inv_two_bw2);
        }
      }
    }
    return phi;
  };
  return fm;
}

}  // namespace polid
