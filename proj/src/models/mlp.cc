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

#include "siamts/models/mlp.h"

#include <string>

#include "siamts/common/error.h"
#include "siamts/numerics/ops.h"

namespace siamts::models {

using numerics::Graph;
using numerics::Shape;

void MlpSpec::validate() const {
  if (widths.empty()) throw ConfigError("mlp: width list is empty");
  for (std::size_t w : widths) {
    if (w == 0) throw ConfigError("mlp: layer widths must be >= 1");
  }
}

Mlp::Mlp(MlpSpec spec, std::size_t input_width, NetworkState state)
    : spec_(std::move(spec)), input_width_(input_width),
      state_(std::move(state)) {
  spec_.validate();
}

Mlp build_mlp(const MlpSpec& spec, std::size_t input_width, Rng& rng) {
  spec.validate();
  if (input_width == 0) throw ConfigError("mlp: zero input width");
  NetworkState state;
  std::size_t in = input_width;
  for (std::size_t i = 0; i < spec.widths.size(); ++i) {
    const std::size_t out = spec.widths[i];
    const std::string p = "dense" + std::to_string(i) + ".";
    state.add(p + "w", he_uniform(Shape{in, out}, in, rng));
    state.add(p + "b", Tensor(Shape{out}, 0.0));
    in = out;
  }
  return Mlp(spec, input_width, std::move(state));
}

Var Mlp::forward(std::span<const Var> params, Var x) const {
  if (params.size() != state_.size()) {
    throw ConfigError("mlp: expected " + std::to_string(state_.size()) +
                      " bound tensors, got " + std::to_string(params.size()));
  }
  if (x.value().rank() != 2 || x.shape()[1] != input_width_) {
    throw ShapeError("mlp: input " + numerics::shape_string(x.shape()) +
                     " is not [B x " + std::to_string(input_width_) + "]");
  }
  Var h = x;
  const std::size_t layers = spec_.widths.size();
  for (std::size_t i = 0; i < layers; ++i) {
    h = add_bias(matmul(h, params[2 * i]), params[2 * i + 1]);
    if (i + 1 == layers) break;
    if (spec_.standardize_hidden) h = standardize(h);
    if (spec_.hidden_relu) h = relu(h);
  }
  return h;
}

Var Mlp::forward_activated(std::span<const Var> params, Var x) const {
  Var out = forward(params, x);
  switch (spec_.output) {
    case OutputActivation::kSoftmax:
      return softmax(out);
    case OutputActivation::kSigmoid:
      return sigmoid(out);
    case OutputActivation::kNone:
      break;
  }
  return out;
}

Tensor Mlp::infer(const Tensor& batch) const {
  Graph g;
  std::vector<Var> params = bind_frozen(g, state_);
  return forward_activated(params, g.constant(batch)).value();
}

}  // namespace siamts::models
