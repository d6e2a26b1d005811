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

#include "siamts/training/losses.h"

#include "siamts/common/error.h"
#include "siamts/numerics/ops.h"

namespace siamts::training {

using namespace numerics;

Var simsiam_loss(Var p_i, Var z_j, Var p_j, Var z_i, bool stop_gradient) {
  if (p_i.shape() != z_j.shape() || p_j.shape() != z_i.shape() ||
      p_i.shape() != p_j.shape()) {
    throw ShapeError("simsiam_loss: p and z shapes differ: " +
                     shape_string(p_i.shape()) + " vs " +
                     shape_string(z_j.shape()));
  }
  if (stop_gradient) {
    z_j = numerics::stop_gradient(z_j);
    z_i = numerics::stop_gradient(z_i);
  }
  Var a = mean(cosine_similarity(p_i, z_j));
  Var b = mean(cosine_similarity(p_j, z_i));
  return scale(add(a, b), -0.5);
}

Var l2_penalty(std::span<const Var> params, double lambda) {
  if (params.empty()) throw ConfigError("l2_penalty: no parameters");
  Var total = sum_squares(params[0]);
  for (std::size_t i = 1; i < params.size(); ++i) {
    total = add(total, sum_squares(params[i]));
  }
  return scale(total, lambda);
}

}  // namespace siamts::training
