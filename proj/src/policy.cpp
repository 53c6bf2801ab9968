#include "polid/policies/policy.hpp"

#include <stdexcept>

#include "polid/estimation/dataset.hpp"

namespace polid {

namespace {

// Generic per-sample evaluator; policies with structure override
// make_nll with something faster.
class GenericNll : public NllObjective {
public:
  GenericNll(const PolicyModel& policy, const DemoDataset& data) : policy_(policy), data_(data) {
    data_.validate();
  }

  int dim() const override { return policy_.param_dim(); }
  std::size_t sample_count() const override { return data_.size(); }

  double value(const Vec& theta) const override {
    double nll = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      nll -= policy_.log_prob(theta, data_.states[i], data_.actions[i]);
    return nll / static_cast<double>(data_.size());
  }

  double value_and_grad(const Vec& theta, Vec& grad) const override {
    grad.assign(policy_.param_dim(), 0.0);
    double nll = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      nll -= policy_.log_prob(theta, data_.states[i], data_.actions[i]);
      axpy(-1.0, policy_.grad_log_prob(theta, data_.states[i], data_.actions[i]), grad);
    }
    const double inv_n = 1.0 / static_cast<double>(data_.size());
    for (double& g : grad) g *= inv_n;
    return nll * inv_n;
  }

private:
  const PolicyModel& policy_;
  DemoDataset data_;
};

}  // namespace

Vec PolicyModel::sufficient_statistic(const State&, const Action&) const {
  throw std::logic_error("sufficient_statistic: policy is not in the exponential family");
}

Vec PolicyModel::mean_sufficient_statistic(const Vec&, const State&) const {
  throw std::logic_error("mean_sufficient_statistic: policy is not in the exponential family");
}

Mat PolicyModel::fisher_state(const Vec&, const State&) const {
  throw std::logic_error("fisher_state: policy is not in the exponential family");
}

double PolicyModel::subgaussian_parameter() const {
  throw std::logic_error("subgaussian_parameter: policy is not in the exponential family");
}

void PolicyModel::normal_equations(const DemoDataset&, Mat&, Vec&) const {
  throw std::logic_error("normal_equations: policy has no quadratic NLL");
}

std::unique_ptr<NllObjective> PolicyModel::make_nll(const DemoDataset& data) const {
  return std::make_unique<GenericNll>(*this, data);
}

void PolicyModel::check_theta(const Vec& theta) const {
  if (static_cast<int>(theta.size()) != param_dim())
    throw std::invalid_argument("policy: theta dimension mismatch");
}

}  // namespace polid
