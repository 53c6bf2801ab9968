// Conditional action distribution families over a parameter vector
// theta. Exponential-family members additionally expose sufficient
// statistics and per-state Fisher information.
//
// Conventions shared by all implementations:
//   * State and Action are dense double vectors; finite-action policies
//     encode the action index in a[0].
//   * Matrix parameters flatten row-by-row: coordinate (i, j) of the
//     k x q matrix lives at flat index i*q + j.
#pragma once

#include <memory>

#include "polid/linalg.hpp"
#include "polid/policies/feature_map.hpp"
#include "polid/rng.hpp"

namespace polid {

struct DemoDataset;

// Negative log-likelihood of a fixed dataset as a function of theta.
// value() returns the per-sample mean so tolerances are n-independent.
class NllObjective {
public:
  virtual ~NllObjective() = default;
  virtual int dim() const = 0;
  virtual std::size_t sample_count() const = 0;
  virtual double value(const Vec& theta) const = 0;
  virtual double value_and_grad(const Vec& theta, Vec& grad) const = 0;
};

class PolicyModel {
public:
  virtual ~PolicyModel() = default;

  virtual int param_dim() const = 0;
  virtual bool exponential_family() const = 0;

  virtual double log_prob(const Vec& theta, const State& s, const Action& a) const = 0;
  virtual Vec grad_log_prob(const Vec& theta, const State& s, const Action& a) const = 0;
  virtual Action sample_action(const Vec& theta, const State& s, SeededRng& rng) const = 0;

  // Exponential-family surface; the default implementations throw.
  virtual Vec sufficient_statistic(const State& s, const Action& a) const;
  virtual Vec mean_sufficient_statistic(const Vec& theta, const State& s) const;
  virtual Mat fisher_state(const Vec& theta, const State& s) const;
  virtual double subgaussian_parameter() const;

  // True when the NLL is an exact quadratic in theta and the MLE can be
  // solved in closed form (Gaussian linear policies).
  virtual bool has_quadratic_nll() const { return false; }
  // Accumulates sum_i of the quadratic-term matrix and linear-term
  // vector of the NLL over a dataset. Only for has_quadratic_nll().
  virtual void normal_equations(const DemoDataset& data, Mat& m, Vec& b) const;

  // Dataset-bound NLL evaluator; subclasses may return a specialized
  // (e.g. state-compressed) implementation.
  virtual std::unique_ptr<NllObjective> make_nll(const DemoDataset& data) const;

protected:
  void check_theta(const Vec& theta) const;
};

}  // namespace polid
