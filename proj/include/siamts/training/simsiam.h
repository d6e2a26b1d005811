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

#ifndef SIAMTS_TRAINING_SIMSIAM_H_
#define SIAMTS_TRAINING_SIMSIAM_H_

#include <span>
#include <vector>

#include "siamts/augment/transforms.h"
#include "siamts/augment/window.h"
#include "siamts/models/networks.h"
#include "siamts/training/config.h"
#include "siamts/training/trace.h"

namespace siamts::training {

struct SimSiamSetup {
  models::FeatureExtractorSpec extractor;
  models::MlpSpec projector = models::default_projector_spec();
  models::MlpSpec predictor = models::default_predictor_spec();
  std::vector<augment::AugmentationSpec> augmentations;
  augment::PairComposition composition = augment::PairComposition::kApplyAll;
  // Un-augmented windows embedded after every epoch for the collapse
  // statistic.
  std::size_t collapse_probe = 256;
};

struct SimSiamResult {
  models::SimSiamNetwork network;
  TrainTrace trace;
};

// Siamese pre-training on unlabelled windows. Every batch draws a positive
// pair per window and minimizes simsiam_loss + lambda * |theta_fe|^2 with
// Adam over extractor, projector and predictor. The trace loss is the
// similarity term alone; early stopping (when enabled) watches it and the
// best epoch's state is returned.
SimSiamResult pretrain_simsiam(std::span<const Window> unlabelled,
                               const SimSiamSetup& setup,
                               const TrainConfig& cfg);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_SIMSIAM_H_
