// Copyright 2026 The SiamTS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "siamts/numerics/adam.h"

#include <cmath>
#include <string>

#include "siamts/common/error.h"

namespace siamts::numerics {

void adam_step(std::span<Tensor* const> params,
               std::span<const Tensor* const> grads, AdamState& state,
               double lr, const AdamConstants& constants) {
  if (params.size() != grads.size()) {
    throw ShapeError("adam_step: " + std::to_string(params.size()) +
                     " parameters but " + std::to_string(grads.size()) +
                     " gradients");
  }
  if (!(lr > 0.0)) throw ConfigError("adam_step: learning rate must be > 0");
  if (state.first_moment.empty()) {
    for (const Tensor* p : params) {
      state.first_moment.emplace_back(p->shape(), 0.0);
      state.second_moment.emplace_back(p->shape(), 0.0);
    }
  }
  if (state.first_moment.size() != params.size()) {
    throw ShapeError("adam_step: optimizer state tracks " +
                     std::to_string(state.first_moment.size()) +
                     " tensors, got " + std::to_string(params.size()));
  }

  ++state.step;
  const double t = static_cast<double>(state.step);
  const double correction1 = 1.0 - std::pow(constants.beta1, t);
  const double correction2 = 1.0 - std::pow(constants.beta2, t);

  for (std::size_t i = 0; i < params.size(); ++i) {
    if (grads[i] == nullptr) continue;
    Tensor& p = *params[i];
    const Tensor& g = *grads[i];
    Tensor& m = state.first_moment[i];
    Tensor& v = state.second_moment[i];
    if (g.shape() != p.shape() || m.shape() != p.shape()) {
      throw ShapeError("adam_step: parameter " + std::to_string(i) +
                       " has shape " + shape_string(p.shape()) +
                       ", gradient " + shape_string(g.shape()));
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      m[j] = constants.beta1 * m[j] + (1.0 - constants.beta1) * g[j];
      v[j] = constants.beta2 * v[j] + (1.0 - constants.beta2) * g[j] * g[j];
      const double m_hat = m[j] / correction1;
      const double v_hat = v[j] / correction2;
      p[j] -= lr * m_hat / (std::sqrt(v_hat) + constants.epsilon);
    }
  }
}

double decayed_lr(double initial_lr, std::int64_t step, double decay_rate,
                  std::int64_t decay_steps) {
  if (!(initial_lr > 0.0)) {
    throw ConfigError("decayed_lr: initial learning rate must be > 0");
  }
  if (!(decay_rate > 0.0 && decay_rate <= 1.0)) {
    throw ConfigError("decayed_lr: decay rate must lie in (0, 1]");
  }
  if (decay_steps <= 0) {
    throw ConfigError("decayed_lr: decay_steps must be positive");
  }
  return initial_lr * std::pow(decay_rate, static_cast<double>(step) /
                                               static_cast<double>(decay_steps));
}

}  // namespace siamts::numerics
