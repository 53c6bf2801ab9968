// Gaussian policy with mean linear in state features and fixed
// covariance: a ~ N(Theta * phi(s), Sigma), theta = vec(Theta^T).
#pragma once

#include "polid/policies/policy.hpp"

namespace polid {

class GaussianLinearPolicy : public PolicyModel {
public:
  GaussianLinearPolicy(FeatureMap features, Mat covariance);

  // Scalar-action convenience constructor.
  GaussianLinearPolicy(FeatureMap features, double variance);

  int param_dim() const override { return action_dim_ * features_.output_dim; }
  bool exponential_family() const override { return true; }
  int action_dim() const { return action_dim_; }
  const FeatureMap& features() const { return features_; }
  const Mat& covariance() const { return sigma_; }

  double log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Vec grad_log_prob(const Vec& theta, const State& s, const Action& a) const override;
  Action sample_action(const Vec& theta, const State& s, SeededRng& rng) const override;

  Vec sufficient_statistic(const State& s, const Action& a) const override;
  Vec mean_sufficient_statistic(const Vec& theta, const State& s) const override;
  Mat fisher_state(const Vec& theta, const State& s) const override;
  double subgaussian_parameter() const override;

  bool has_quadratic_nll() const override { return true; }
  void normal_equations(const DemoDataset& data, Mat& m, Vec& b) const override;

  Vec mean_action(const Vec& theta, const State& s) const;

private:
  FeatureMap features_;
  int action_dim_;
  Mat sigma_;
  Mat sigma_inv_;
  Mat sigma_chol_;  // lower factor, for sampling
  double log_det_sigma_;
  double sigma_min_eig_;
};

}  // namespace polid
