#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "uncsens/errors.hpp"

namespace uncsens {

// Adam optimizer state with the usual defaults.
struct AdamState {
  std::size_t step = 0;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  AdamState() = default;
  AdamState(std::size_t param_count, double lr)
      : first_moment(param_count, 0.0),
        second_moment(param_count, 0.0),
        learning_rate(lr) {}
};

// One bias-corrected Adam update, in place.
inline void adam_step(AdamState& state, std::span<double> params,
                      std::span<const double> grads) {
  if (params.size() != grads.size() || params.size() != state.first_moment.size()) {
    throw contract_error("adam_step: parameter/gradient/moment shape mismatch");
  }
  state.step += 1;
  const double b1 = state.beta1, b2 = state.beta2;
  const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    double g = grads[i];
    state.first_moment[i] = b1 * state.first_moment[i] + (1.0 - b1) * g;
    state.second_moment[i] = b2 * state.second_moment[i] + (1.0 - b2) * g * g;
    double m_hat = state.first_moment[i] / corr1;
    double v_hat = state.second_moment[i] / corr2;
    params[i] -= state.learning_rate * m_hat / (std::sqrt(v_hat) + state.eps);
  }
}

}  // namespace uncsens
