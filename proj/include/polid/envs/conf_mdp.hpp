// Configurable MDP: a family of MDPs sharing state/action spaces,
// indexed by a configuration vector omega that moves the initial-state
// distribution and/or the transition model.
//
// Environments are stateless: reset/step are const and all episode
// state travels through the State value, so instances can serve many
// concurrent episodes.
#pragma once

#include "polid/linalg.hpp"
#include "polid/policies/feature_map.hpp"
#include "polid/rng.hpp"

namespace polid {

struct StepResult {
  State next;
  double reward = 0.0;
  bool done = false;
};

class ConfMdp {
public:
  virtual ~ConfMdp() = default;

  virtual int state_dim() const = 0;
  virtual int horizon() const = 0;
  virtual double discount() const = 0;

  virtual int config_dim() const = 0;
  virtual Vec default_config() const = 0;
  virtual bool transition_depends_on_config() const = 0;

  virtual State reset(const Vec& omega, SeededRng& rng) const = 0;
  virtual StepResult step(const State& s, const Action& a, const Vec& omega,
                          SeededRng& rng) const = 0;

  // Normalized log density/mass of the initial state under omega.
  virtual double log_init_density(const Vec& omega, const State& s0) const = 0;

  // Batched form; environments with shared per-omega normalizers
  // override this to amortize them.
  virtual Vec log_init_density_batch(const Vec& omega, const std::vector<State>& states) const {
    Vec out(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) out[i] = log_init_density(omega, states[i]);
    return out;
  }

  // Projects a configuration proposal back into the valid region Omega.
  virtual Vec clamp_config(Vec omega) const { return omega; }

protected:
  void check_config(const Vec& omega) const {
    if (static_cast<int>(omega.size()) != config_dim())
      throw std::invalid_argument("ConfMdp: configuration dimension mismatch");
  }
};

}  // namespace polid
