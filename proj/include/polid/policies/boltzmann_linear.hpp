// Boltzmann (softmax) policy linear in state features over k+1 finite
// actions. Only the first k actions carry parameter rows; the last one
// is the implicit zero-logit reference, which keeps the
// parameterization identifiable.
#pragma once

#include "polid/policies/policy.hpp"

namespace polid {

class BoltzmannLinearPolicy : public PolicyModel {
public:
  BoltzmannLinearPolicy(FeatureMap features, int action_count);

  int param_dim() const override { return (action_count_ - 1) * features_.output_dim; }
  bool exponential_family() const override { return true; }
  int action_count() const { return action_count_; }
  const FeatureMap& features() const { return features_; }

  double log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Vec grad_log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Action sample_action(const Vec& theta, const State& s, SeededRng& rng) const override;

  Vec sufficient_statistic(const State& s, const Action& a) const override;
  Vec mean_sufficient_statistic(const Vec& theta, const State& s) const override;
  Mat fisher_state(const Vec& theta, const State& s) const override;
  double subgaussian_parameter() const override;

  std::unique_ptr<NllObjective> make_nll(const DemoDataset& data) const override;

  // Probabilities of all k+1 actions.
  Vec action_probabilities(const Vec& theta, const State& s) const;

private:
  int action_index(const Action& a) const;
  // Probabilities given precomputed features.
  Vec probabilities_from_features(const Vec& theta, const Vec& phi) const;

  FeatureMap features_;
  int action_count_;

  friend class BoltzmannNll;
};

}  // namespace polid
