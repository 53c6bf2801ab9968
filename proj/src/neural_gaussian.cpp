#include "polid/policies/neural_gaussian.hpp"

#include <cmath>
#include <numbers>

namespace polid {

NeuralGaussianPolicy::NeuralGaussianPolicy(int input_dim, int action_dim, double variance,
                                           int hidden_dim)
    : input_(input_dim), action_(action_dim), hidden_(hidden_dim), variance_(variance) {
  if (input_ < 1 || action_ < 1 || hidden_ < 1)
    throw std::invalid_argument("NeuralGaussianPolicy: dimensions must be positive");
  if (!(variance_ > 0.0))
    throw std::invalid_argument("NeuralGaussianPolicy: variance must be positive");
}

NeuralGaussianPolicy::Forward NeuralGaussianPolicy::forward(const Vec& theta,
                                                            const State& s) const {
  check_theta(theta);
  // The first input_dim entries are the observation; environments may
  // append bookkeeping dimensions.
  if (static_cast<int>(s.size()) < input_)
    throw std::invalid_argument("NeuralGaussianPolicy: state dimension mismatch");
  const double* w1 = theta.data();
  const double* b1 = w1 + hidden_ * input_;
  const double* w2 = b1 + hidden_;
  const double* b2 = w2 + action_ * hidden_;

  Forward f;
  f.hidden.resize(hidden_);
  for (int h = 0; h < hidden_; ++h) {
    double z = b1[h];
    for (int j = 0; j < input_; ++j) z += w1[h * input_ + j] * s[j];
    f.hidden[h] = std::tanh(z);
  }
  f.mean.resize(action_);
  for (int o = 0; o < action_; ++o) {
    double z = b2[o];
    for (int h = 0; h < hidden_; ++h) z += w2[o * hidden_ + h] * f.hidden[h];
    f.mean[o] = z;
  }
  return f;
}

Vec NeuralGaussianPolicy::mean_action(const Vec& theta, const State& s) const {
  return forward(theta, s).mean;
}

double NeuralGaussianPolicy::log_prob(const Vec& theta, const State& s, const Action& a) const {
  if (static_cast<int>(a.size()) != action_)
    throw std::invalid_argument("NeuralGaussianPolicy: action dimension mismatch");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("NeuralGaussianPolicy: non-finite action");
  const Forward f = forward(theta, s);
  double quad = 0.0;
  for (int o = 0; o < action_; ++o) {
    const double r = a[o] - f.mean[o];
    quad += r * r;
  }
  return -0.5 * action_ * std::log(2.0 * std::numbers::pi * variance_) - 0.5 * quad / variance_;
}

Vec NeuralGaussianPolicy::grad_log_prob(const Vec& theta, const State& s, const Action& a) const {
  const Forward f = forward(theta, s);
  const double* w2 = theta.data() + hidden_ * input_ + hidden_;

  // d logp / d mean
  Vec dmean(action_);
  for (int o = 0; o < action_; ++o) dmean[o] = (a[o] - f.mean[o]) / variance_;

  Vec g(param_dim(), 0.0);
  double* g_w1 = g.data();
  double* g_b1 = g_w1 + hidden_ * input_;
  double* g_w2 = g_b1 + hidden_;
  double* g_b2 = g_w2 + action_ * hidden_;

  for (int o = 0; o < action_; ++o) {
    g_b2[o] = dmean[o];
    for (int h = 0; h < hidden_; ++h) g_w2[o * hidden_ + h] = dmean[o] * f.hidden[h];
  }
  for (int h = 0; h < hidden_; ++h) {
    double dh = 0.0;
    for (int o = 0; o < action_; ++o) dh += dmean[o] * w2[o * hidden_ + h];
    dh *= 1.0 - f.hidden[h] * f.hidden[h];  // tanh'
    g_b1[h] = dh;
    for (int j = 0; j < input_; ++j) g_w1[h * input_ + j] = dh * s[j];
  }
  return g;
}

Action NeuralGaussianPolicy::sample_action(const Vec& theta, const State& s,
                                           SeededRng& rng) const {
  Vec mean = forward(theta, s).mean;
  const double stddev = std::sqrt(variance_);
  for (int o = 0; o < action_; ++o) mean[o] += stddev * rng.normal();
  return mean;
}

std::vector<int> NeuralGaussianPolicy::input_weight_indices(int input) const {
  if (input < 0 || input >= input_)
    throw std::invalid_argument("input_weight_indices: input out of range");
  std::vector<int> idx(hidden_);
  for (int h = 0; h < hidden_; ++h) idx[h] = h * input_ + input;
  return idx;
}

}  // namespace polid
