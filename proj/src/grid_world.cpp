#include "polid/envs/grid_world.hpp"

#include <algorithm>
#include <cmath>

namespace polid {

namespace {

// log softmax normalizer over 25 logits
double log_z(const double* logits, int n) {
  double m = logits[0];
  for (int i = 1; i < n; ++i) m = std::max(m, logits[i]);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(logits[i] - m);
  return m + std::log(s);
}

int sample_cell(const double* logits, int n, SeededRng& rng) {
  const double lz = log_z(logits, n);
  double u = rng.uniform();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += std::exp(logits[i] - lz);
    if (u < acc) return i;
  }
  return n - 1;
}

}  // namespace

DiscreteGridWorld::DiscreteGridWorld(int horizon, double gamma) : horizon_(horizon), gamma_(gamma) {
  if (horizon_ < 1) throw std::invalid_argument("DiscreteGridWorld: horizon must be positive");
  if (!(gamma_ > 0.0 && gamma_ <= 1.0))
    throw std::invalid_argument("DiscreteGridWorld: discount must lie in (0,1]");
}

State DiscreteGridWorld::reset(const Vec& omega, SeededRng& rng) const {
  check_config(omega);
  const int agent = sample_cell(omega.data(), kCells, rng);
  const int goal = sample_cell(omega.data() + kCells, kCells, rng);
  return {static_cast<double>(agent / kSize), static_cast<double>(agent % kSize),
          static_cast<double>(goal / kSize), static_cast<double>(goal % kSize)};
}

StepResult DiscreteGridWorld::step(const State& s, const Action& a, const Vec& omega,
                                   SeededRng&) const {
  check_config(omega);
  if (a.size() != 1 || !std::isfinite(a[0]))
    throw std::invalid_argument("DiscreteGridWorld: action must be a finite index");
  const int act = static_cast<int>(a[0]);
  if (act < 0 || act >= kActions)
    throw std::invalid_argument("DiscreteGridWorld: action index out of range");

  int r = static_cast<int>(s[0]);
  int c = static_cast<int>(s[1]);
  const int gr = static_cast<int>(s[2]);
  const int gc = static_cast<int>(s[3]);

  static constexpr int dr[kActions] = {-1, 0, 1, 0};
  static constexpr int dc[kActions] = {0, 1, 0, -1};
  r = std::clamp(r + dr[act], 0, kSize - 1);
  c = std::clamp(c + dc[act], 0, kSize - 1);

  StepResult out;
  out.next = {static_cast<double>(r), static_cast<double>(c), static_cast<double>(gr),
              static_cast<double>(gc)};
  if (r == gr && c == gc) {
    out.reward = 1.0;
    out.done = true;
  }
  return out;
}

double DiscreteGridWorld::log_init_density(const Vec& omega, const State& s0) const {
  check_config(omega);
  const int ar = static_cast<int>(s0[0]), ac = static_cast<int>(s0[1]);
  const int gr = static_cast<int>(s0[2]), gc = static_cast<int>(s0[3]);
  if (ar < 0 || ar >= kSize || ac < 0 || ac >= kSize || gr < 0 || gr >= kSize || gc < 0 ||
      gc >= kSize)
    throw std::invalid_argument("DiscreteGridWorld: state outside the grid");
  const int agent = ar * kSize + ac;
  const int goal = gr * kSize + gc;
  return omega[agent] - log_z(omega.data(), kCells) + omega[kCells + goal] -
         log_z(omega.data() + kCells, kCells);
}

Vec DiscreteGridWorld::log_init_density_batch(const Vec& omega,
                                              const std::vector<State>& states) const {
  check_config(omega);
  const double lz_agent = log_z(omega.data(), kCells);
  const double lz_goal = log_z(omega.data() + kCells, kCells);
  Vec out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const State& s = states[i];
    const int agent = static_cast<int>(s[0]) * kSize + static_cast<int>(s[1]);
    const int goal = static_cast<int>(s[2]) * kSize + static_cast<int>(s[3]);
    out[i] = omega[agent] - lz_agent + omega[kCells + goal] - lz_goal;
  }
  return out;
}

FeatureMap DiscreteGridWorld::features() const {
  FeatureMap fm;
  fm.output_dim = 4 * (kSize - 1);
  fm.bound = 2.0;  // at most four ones
  fm.evaluate = [](const State& s) {
    Vec phi(4 * (kSize - 1), 0.0);
    const int idx[4] = {static_cast<int>(s[0]), static_cast<int>(s[1]), static_cast<int>(s[2]),
                        static_cast<int>(s[3])};
    for (int b = 0; b < 4; ++b)
      if (idx[b] < kSize - 1) phi[b * (kSize - 1) + idx[b]] = 1.0;
    return phi;
  };
  return fm;
}

}  // namespace polid
