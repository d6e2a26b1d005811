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

#ifndef SIAMTS_MODELS_MLP_H_
#define SIAMTS_MODELS_MLP_H_

#include <span>
#include <vector>

#include "siamts/models/network_state.h"

namespace siamts::models {

enum class OutputActivation { kNone, kSoftmax, kSigmoid };

struct MlpSpec {
  std::vector<std::size_t> widths;
  OutputActivation output = OutputActivation::kNone;
  // ReLU between hidden layers; switched off only to build linear test
  // fixtures.
  bool hidden_relu = true;
  // Batch standardization of every hidden pre-activation.
  bool standardize_hidden = false;

  void validate() const;
};

// Dense stack: hidden layers Dense(+standardize)+ReLU, last layer Dense.
class Mlp {
 public:
  Mlp(MlpSpec spec, std::size_t input_width, NetworkState state);

  const MlpSpec& spec() const { return spec_; }
  std::size_t input_width() const { return input_width_; }
  std::size_t output_width() const { return spec_.widths.back(); }
  NetworkState& state() { return state_; }
  const NetworkState& state() const { return state_; }

  // Output of the last Dense layer, before the output activation.
  Var forward(std::span<const Var> params, Var x) const;
  // forward() followed by the configured output activation.
  Var forward_activated(std::span<const Var> params, Var x) const;

  // Activated outputs for a [B x input_width] batch.
  Tensor infer(const Tensor& batch) const;

 private:
  MlpSpec spec_;
  std::size_t input_width_;
  NetworkState state_;
};

Mlp build_mlp(const MlpSpec& spec, std::size_t input_width, Rng& rng);

}  // namespace siamts::models

#endif  // SIAMTS_MODELS_MLP_H_
