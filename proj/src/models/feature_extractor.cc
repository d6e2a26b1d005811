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

#include "siamts/models/feature_extractor.h"

#include <string>

#include "siamts/common/error.h"
#include "siamts/numerics/ops.h"

namespace siamts::models {

using numerics::Graph;
using numerics::Shape;

void FeatureExtractorSpec::validate() const {
  if (filters.empty()) {
    throw ConfigError("feature extractor: filter list is empty");
  }
  for (std::size_t f : filters) {
    if (f == 0) throw ConfigError("feature extractor: filter counts must be >= 1");
  }
  if (kernel_size == 0 || kernel_size % 2 == 0) {
    throw ConfigError("feature extractor: kernel size must be odd");
  }
  if (weight_decay < 0.0) {
    throw ConfigError("feature extractor: weight decay must be >= 0");
  }
}

FeatureExtractor::FeatureExtractor(FeatureExtractorSpec spec,
                                   std::size_t channels, NetworkState state)
    : spec_(std::move(spec)), channels_(channels), state_(std::move(state)) {
  spec_.validate();
}

FeatureExtractor build_feature_extractor(const FeatureExtractorSpec& spec,
                                         std::size_t channels, Rng& rng) {
  spec.validate();
  if (channels == 0) throw ConfigError("feature extractor: zero input channels");
  const std::size_t k = spec.kernel_size;
  NetworkState state;
  state.add("conv0.w", he_uniform(Shape{k, channels, spec.filters[0]},
                                  k * channels, rng));
  state.add("conv0.b", Tensor(Shape{spec.filters[0]}, 0.0));
  for (std::size_t i = 1; i < spec.filters.size(); ++i) {
    const std::size_t in = spec.filters[i - 1], out = spec.filters[i];
    const std::string p = "block" + std::to_string(i) + ".";
    state.add(p + "conv_a.w", he_uniform(Shape{k, in, out}, k * in, rng));
    state.add(p + "conv_a.b", Tensor(Shape{out}, 0.0));
    state.add(p + "conv_b.w", he_uniform(Shape{k, out, out}, k * out, rng));
    state.add(p + "conv_b.b", Tensor(Shape{out}, 0.0));
    if (in != out) {
      state.add(p + "skip.w", he_uniform(Shape{1, in, out}, in, rng));
    }
  }
  return FeatureExtractor(spec, channels, std::move(state));
}

Var FeatureExtractor::forward(std::span<const Var> params, Var x) const {
  if (params.size() != state_.size()) {
    throw ConfigError("feature extractor: expected " +
                      std::to_string(state_.size()) + " bound tensors, got " +
                      std::to_string(params.size()));
  }
  if (x.value().rank() != 3 || x.shape()[2] != channels_) {
    throw ShapeError("feature extractor: input " +
                     numerics::shape_string(x.shape()) + " is not [B x T x " +
                     std::to_string(channels_) + "]");
  }
  const std::size_t pad = (spec_.kernel_size - 1) / 2;
  std::size_t next = 0;
  auto take = [&] { return params[next++]; };

  Var w0 = take(), b0 = take();
  Var h = relu(add_bias(conv1d(x, w0, 1, pad), b0));
  for (std::size_t i = 1; i < spec_.filters.size(); ++i) {
    Var wa = take(), ba = take(), wb = take(), bb = take();
    Var a = relu(add_bias(conv1d(h, wa, 1, pad), ba));
    Var r = add_bias(conv1d(a, wb, 1, pad), bb);
    Var skip = h;
    if (spec_.filters[i - 1] != spec_.filters[i]) skip = conv1d(h, take(), 1, 0);
    h = relu(r + skip);
  }
  return mean_over_time(h);
}

Tensor FeatureExtractor::features(const Tensor& batch) const {
  Graph g;
  std::vector<Var> params = bind_frozen(g, state_);
  return forward(params, g.constant(batch)).value();
}

}  // namespace siamts::models
