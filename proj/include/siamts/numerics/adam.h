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

#ifndef SIAMTS_NUMERICS_ADAM_H_
#define SIAMTS_NUMERICS_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "siamts/numerics/tensor.h"

namespace siamts::numerics {

struct AdamConstants {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Moment accumulators, one pair per parameter tensor, created lazily on the
// first step.
struct AdamState {
  std::vector<Tensor> first_moment;
  std::vector<Tensor> second_moment;
  std::int64_t step = 0;
};

// One bias-corrected Adam update. `grads[i]` may be null for a parameter
// that received no gradient; that parameter is left untouched.
void adam_step(std::span<Tensor* const> params,
               std::span<const Tensor* const> grads, AdamState& state,
               double lr, const AdamConstants& constants = {});

// initial_lr * decay_rate^(step / decay_steps), continuous in step.
double decayed_lr(double initial_lr, std::int64_t step, double decay_rate,
                  std::int64_t decay_steps);

}  // namespace siamts::numerics

#endif  // SIAMTS_NUMERICS_ADAM_H_
