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

#ifndef SIAMTS_MODELS_FEATURE_EXTRACTOR_H_
#define SIAMTS_MODELS_FEATURE_EXTRACTOR_H_

#include <span>
#include <vector>

#include "siamts/models/network_state.h"

namespace siamts::models {

struct FeatureExtractorSpec {
  // filters[0] is the width of the initial convolution; every further entry
  // adds one residual block of that width.
  std::vector<std::size_t> filters{128, 256};
  std::size_t kernel_size = 3;
  // L2 penalty factor applied to these parameters during pre-text training.
  double weight_decay = 0.01;

  void validate() const;
};

// 1D ResNet: conv-ReLU stem, residual blocks conv-ReLU-conv + skip (1x1
// projection when the width changes) followed by ReLU, then global average
// pooling over time.
class FeatureExtractor {
 public:
  FeatureExtractor(FeatureExtractorSpec spec, std::size_t channels,
                   NetworkState state);

  const FeatureExtractorSpec& spec() const { return spec_; }
  std::size_t channels() const { return channels_; }
  std::size_t output_width() const { return spec_.filters.back(); }
  NetworkState& state() { return state_; }
  const NetworkState& state() const { return state_; }

  // x is [B x T x C]; `params` are this state's tensors bound in order.
  // Returns [B x filters.back()].
  Var forward(std::span<const Var> params, Var x) const;

  // Inference on a [B x T x C] batch.
  Tensor features(const Tensor& batch) const;

 private:
  FeatureExtractorSpec spec_;
  std::size_t channels_;
  NetworkState state_;
};

FeatureExtractor build_feature_extractor(const FeatureExtractorSpec& spec,
                                         std::size_t channels, Rng& rng);

}  // namespace siamts::models

#endif  // SIAMTS_MODELS_FEATURE_EXTRACTOR_H_
