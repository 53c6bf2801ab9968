#include "polid/envs/car_driving.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polid {

namespace {

// Smallest positive t with |p + t u| = rho, or infinity.
double ray_circle(double px, double py, double ux, double uy, double rho) {
  const double b = px * ux + py * uy;
  const double c = px * px + py * py - rho * rho;
  const double disc = b * b - c;
  if (disc < 0.0) return std::numeric_limits<double>::infinity();
  const double sq = std::sqrt(disc);
  const double t1 = -b - sq;
  if (t1 > 1e-12) return t1;
  const double t2 = -b + sq;
  if (t2 > 1e-12) return t2;
  return std::numeric_limits<double>::infinity();
}

}  // namespace

const std::vector<double>& CarDriving::sensor_angles() {
  static const double pi = 3.14159265358979323846;
  static const std::vector<double> angles = {-pi / 4.0, -pi / 6.0, pi / 6.0, pi / 4.0};
  return angles;
}

CarDriving::CarDriving(int horizon, double gamma) : horizon_(horizon), gamma_(gamma) {
  if (horizon_ < 1) throw std::invalid_argument("CarDriving: horizon must be positive");
  if (!(gamma_ > 0.0 && gamma_ <= 1.0))
    throw std::invalid_argument("CarDriving: discount must lie in (0,1]");
}

State CarDriving::observe(double v, double r, double chi, double progress) const {
  State s(8);
  s[0] = v / kMaxSpeed;
  // Car at (r, 0) heading chi relative to the tangent (pointing +y).
  const double px = r, py = 0.0;
  const auto& angles = sensor_angles();
  for (int i = 0; i < 4; ++i) {
    const double dir = chi + 1.5707963267948966 + angles[i];
    const double ux = std::cos(dir), uy = std::sin(dir);
    double t = std::min(ray_circle(px, py, ux, uy, kRoadRadius + kRoadHalfWidth),
                        ray_circle(px, py, ux, uy, kRoadRadius - kRoadHalfWidth));
    t = std::min(t, kSensorRange);
    s[1 + i] = t / kSensorRange;
  }
  s[5] = r;
  s[6] = chi;
  s[7] = progress;
  return s;
}

State CarDriving::reset(const Vec& omega, SeededRng&) const {
  check_config(omega);
  return observe(0.1 * kMaxSpeed, kRoadRadius, 0.0, 0.0);
}

StepResult CarDriving::step(const State& s, const Action& a, const Vec& omega, SeededRng&) const {
  check_config(omega);
  if (a.size() != 2) throw std::invalid_argument("CarDriving: action must be 2-D");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("CarDriving: non-finite action");

  double v = s[0] * kMaxSpeed;
  double r = s[5];
  double chi = s[6];
  double progress = s[7];

  const double accel = std::clamp(a[0], -1.0, 1.0);
  const double steer = std::clamp(a[1], -1.0, 1.0);

  v = std::clamp(v + kAccelPerStep * accel, 0.0, kMaxSpeed);
  const double d_arc = v * std::cos(chi) / r;
  r += v * std::sin(chi);
  chi += kSteerPerStep * steer - d_arc;
  progress += d_arc;

  StepResult out;
  out.next = observe(v, r, chi, progress);
  if (r < kRoadRadius - kRoadHalfWidth || r > kRoadRadius + kRoadHalfWidth) {
    out.reward = -1.0;
    out.done = true;
  } else if (progress >= kTargetProgress) {
    out.reward = v / kMaxSpeed;
    out.done = true;
  } else {
    out.reward = v / kMaxSpeed;
  }
  return out;
}

double CarDriving::log_init_density(const Vec& omega, const State& s0) const {
  check_config(omega);
  // Deterministic start: unit mass on the reset state.
  SeededRng dummy(0);
  const State start = reset(omega, dummy);
  for (std::size_t i = 0; i < start.size(); ++i)
    if (std::fabs(s0[i] - start[i]) > 1e-9)
      throw std::invalid_argument("CarDriving: state outside the initial support");
  return 0.0;
}

}  // namespace polid
