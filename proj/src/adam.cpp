#include "polid/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace polid {

AdamState AdamState::create(int dim, double learning_rate) {
  AdamState st;
  st.first_moment.assign(dim, 0.0);
  st.second_moment.assign(dim, 0.0);
  st.learning_rate = learning_rate;
  return st;
}

void adam_update(AdamState& state, Vec& params, const Vec& grad, int sign) {
  const std::size_t d = params.size();
  if (grad.size() != d || state.first_moment.size() != d || state.second_moment.size() != d)
    throw std::invalid_argument("adam_update: dimension mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("adam_update: sign must be +1 or -1");

  state.step_count += 1;
  const double b1t = 1.0 - std::pow(state.beta1, static_cast<double>(state.step_count));
  const double b2t = 1.0 - std::pow(state.beta2, static_cast<double>(state.step_count));
  for (std::size_t i = 0; i < d; ++i) {
    state.first_moment[i] = state.beta1 * state.first_moment[i] + (1.0 - state.beta1) * grad[i];
    state.second_moment[i] =
        state.beta2 * state.second_moment[i] + (1.0 - state.beta2) * grad[i] * grad[i];
    const double m_hat = state.first_moment[i] / b1t;
    const double v_hat = state.second_moment[i] / b2t;
    params[i] += sign * state.learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon);
  }
}

}  // namespace polid
