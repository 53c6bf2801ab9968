// Gaussian policy whose mean is a one-hidden-layer tanh network, with
// fixed diagonal covariance.
//
// Parameter layout, in order:
//   W1 (hidden x input, row-major), b1 (hidden),
//   W2 (action x hidden, row-major), b2 (action).
#pragma once

#include "polid/policies/policy.hpp"

namespace polid {

class NeuralGaussianPolicy : public PolicyModel {
public:
  NeuralGaussianPolicy(int input_dim, int action_dim, double variance, int hidden_dim = 8);

  int param_dim() const override {
    return hidden_ * input_ + hidden_ + action_ * hidden_ + action_;
  }
  bool exponential_family() const override { return false; }
  int input_dim() const { return input_; }
  int action_dim() const { return action_; }
  int hidden_dim() const { return hidden_; }

  double log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Vec grad_log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Action sample_action(const Vec& theta, const State& s, SeededRng& rng) const override;

  Vec mean_action(const Vec& theta, const State& s) const;

  // Flat indices of the first-layer weights reading input column i;
  // pinning them severs the network from that input.
  std::vector<int> input_weight_indices(int input) const;

private:
  struct Forward {
    Vec hidden;  // tanh activations
    Vec mean;
  };
  Forward forward(const Vec& theta, const State& s) const;

  int input_;
  int action_;
  int hidden_;
  double variance_;
};

}  // namespace polid
