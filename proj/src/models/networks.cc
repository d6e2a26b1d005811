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

#include "siamts/models/networks.h"

#include <string>

#include "siamts/common/error.h"

namespace siamts::models {

MlpSpec default_projector_spec() { return MlpSpec{{512, 512}}; }

MlpSpec default_predictor_spec() { return MlpSpec{{2048, 512}}; }

MlpSpec classifier_head_spec(std::size_t n_classes) {
  return MlpSpec{{256, 64, n_classes}, OutputActivation::kSoftmax};
}

MlpSpec mtssl_head_spec() { return MlpSpec{{64, 1}, OutputActivation::kSigmoid}; }

NetworkState SimSiamNetwork::bundle() const {
  NetworkState out;
  out.seed = extractor.state().seed;
  out.merge("fe/", extractor.state());
  out.merge("proj/", projector.state());
  out.merge("pred/", predictor.state());
  return out;
}

SimSiamNetwork build_simsiam(const FeatureExtractorSpec& fe_spec,
                             const MlpSpec& projector_spec,
                             const MlpSpec& predictor_spec,
                             std::size_t channels, Rng& rng) {
  projector_spec.validate();
  predictor_spec.validate();
  const std::size_t z_width = projector_spec.widths.back();
  if (predictor_spec.widths.back() != z_width) {
    throw ConfigError("simsiam: predictor output width " +
                      std::to_string(predictor_spec.widths.back()) +
                      " differs from projector output width " +
                      std::to_string(z_width));
  }
  FeatureExtractor fe = build_feature_extractor(fe_spec, channels, rng);
  Mlp proj = build_mlp(projector_spec, fe.output_width(), rng);
  Mlp pred = build_mlp(predictor_spec, z_width, rng);
  return {std::move(fe), std::move(proj), std::move(pred)};
}

MtsslNetwork build_mtssl(const FeatureExtractorSpec& fe_spec,
                         std::size_t channels, std::size_t n_heads, Rng& rng,
                         const MlpSpec& head_spec) {
  if (n_heads == 0) throw ConfigError("mtssl: need at least one head");
  if (head_spec.widths.empty() || head_spec.widths.back() != 1) {
    throw ConfigError("mtssl: heads must end in a single output");
  }
  FeatureExtractor fe = build_feature_extractor(fe_spec, channels, rng);
  std::vector<Mlp> heads;
  for (std::size_t i = 0; i < n_heads; ++i) {
    heads.push_back(build_mlp(head_spec, fe.output_width(), rng));
  }
  return {std::move(fe), std::move(heads)};
}

Tensor encode_batch(const FeatureExtractor& extractor, const Mlp& projector,
                    std::span<const Window> windows) {
  return projector.infer(extractor.features(stack_windows(windows)));
}

Tensor encode(const FeatureExtractor& extractor, const Mlp& projector,
              const Window& x) {
  Tensor z = encode_batch(extractor, projector, std::span(&x, 1));
  return z.reshaped({z.size()});
}

Tensor predict(const Mlp& predictor, const Tensor& z) {
  if (z.rank() != 1 || z.size() != predictor.input_width()) {
    throw ShapeError("predict: z " + numerics::shape_string(z.shape()) +
                     " does not match predictor input width " +
                     std::to_string(predictor.input_width()));
  }
  Tensor p = predictor.infer(z.reshaped({1, z.size()}));
  return p.reshaped({p.size()});
}

Tensor classify(const FeatureExtractor& extractor, const Mlp& head,
                const Window& x) {
  Tensor probs = head.infer(extractor.features(stack_windows(std::span(&x, 1))));
  return probs.reshaped({probs.size()});
}

}  // namespace siamts::models
