// Seeded, splittable random number generator used by every stochastic
// component. One instance per worker; child streams via split().
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace polid {

class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal (Marsaglia polar, second draw cached).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Index sampled from an unnormalized weight vector.
  int categorical(std::span<const double> weights);

  // Integer in [0, n).
  int uniform_int(int n);

  // Deterministic child stream; independent of draws made on the parent.
  SeededRng split(std::uint64_t stream) const;

private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace polid
