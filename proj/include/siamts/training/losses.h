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

#ifndef SIAMTS_TRAINING_LOSSES_H_
#define SIAMTS_TRAINING_LOSSES_H_

#include <span>

#include "siamts/numerics/graph.h"

namespace siamts::training {

using numerics::Var;

// -1/2 cos(p_i, sg(z_j)) - 1/2 cos(p_j, sg(z_i)). Rank-1 arguments give the
// loss of one pair; [B x D] arguments give the batch mean. With
// `stop_gradient` false the z branches stay differentiable (collapse
// ablation).
Var simsiam_loss(Var p_i, Var z_j, Var p_j, Var z_i, bool stop_gradient = true);

// lambda * sum of squared entries over `params`.
Var l2_penalty(std::span<const Var> params, double lambda);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_LOSSES_H_
