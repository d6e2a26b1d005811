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

#ifndef SIAMTS_MODELS_NETWORKS_H_
#define SIAMTS_MODELS_NETWORKS_H_

#include <vector>

#include "siamts/augment/window.h"
#include "siamts/models/feature_extractor.h"
#include "siamts/models/mlp.h"

namespace siamts::models {

// Two dense layers of width 512.
MlpSpec default_projector_spec();
// Dense 2048 -> 512.
MlpSpec default_predictor_spec();
// Dense 256 -> 64 -> n_classes with softmax.
MlpSpec classifier_head_spec(std::size_t n_classes);
// Dense 64 -> 1 with sigmoid; one per multi-task head.
MlpSpec mtssl_head_spec();

// Feature extractor, projector and predictor trained jointly by the
// Siamese objective.
struct SimSiamNetwork {
  FeatureExtractor extractor;
  Mlp projector;
  Mlp predictor;

  // All three parameter sets under the prefixes "fe/", "proj/", "pred/".
  NetworkState bundle() const;
};

// Throws ConfigError when the predictor does not map the projector's
// output width back onto itself.
SimSiamNetwork build_simsiam(const FeatureExtractorSpec& fe_spec,
                             const MlpSpec& projector_spec,
                             const MlpSpec& predictor_spec,
                             std::size_t channels, Rng& rng);

// Shared extractor with one binary "was transform k applied" head per task.
struct MtsslNetwork {
  FeatureExtractor extractor;
  std::vector<Mlp> heads;
};

MtsslNetwork build_mtssl(const FeatureExtractorSpec& fe_spec,
                         std::size_t channels, std::size_t n_heads, Rng& rng,
                         const MlpSpec& head_spec = mtssl_head_spec());

// Extractor plus softmax classification head.
struct ClassifierNetwork {
  FeatureExtractor extractor;
  Mlp head;

  std::size_t n_classes() const { return head.output_width(); }
};

// z = projector(extractor(x)) for one window.
Tensor encode(const FeatureExtractor& extractor, const Mlp& projector,
              const Window& x);
// z for every window, as a [B x D] batch.
Tensor encode_batch(const FeatureExtractor& extractor, const Mlp& projector,
                    std::span<const Window> windows);
// p = predictor(z).
Tensor predict(const Mlp& predictor, const Tensor& z);
// Class probabilities for one window.
Tensor classify(const FeatureExtractor& extractor, const Mlp& head,
                const Window& x);

}  // namespace siamts::models

#endif  // SIAMTS_MODELS_NETWORKS_H_
