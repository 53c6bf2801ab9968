// Bias-corrected Adam with an ascend/descend sign, shared by the MLE
// fitter, the policy-gradient trainer, and the configuration search.
#pragma once

#include "polid/linalg.hpp"

namespace polid {

struct AdamState {
  long step_count = 0;
  Vec first_moment;
  Vec second_moment;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState create(int dim, double learning_rate);
};

// One update in place; sign = +1 ascends, -1 descends.
void adam_update(AdamState& state, Vec& params, const Vec& grad, int sign);

}  // namespace polid
