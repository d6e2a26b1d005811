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

#ifndef SIAMTS_TRAINING_MTSSL_H_
#define SIAMTS_TRAINING_MTSSL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "siamts/augment/transforms.h"
#include "siamts/augment/window.h"
#include "siamts/models/networks.h"
#include "siamts/training/config.h"
#include "siamts/training/trace.h"

namespace siamts::training {

struct MtsslSetup {
  models::FeatureExtractorSpec extractor;
  // One binary head per task.
  std::vector<augment::AugmentationSpec> tasks;
  models::MlpSpec head = models::mtssl_head_spec();
};

struct MtsslResult {
  models::MtsslNetwork network;
  TrainTrace trace;
};

// Multi-task transformation recognition. For every batch and head, each
// window is transformed with probability 1/2 and the head learns to tell;
// loss = mean over heads of the binary cross-entropy, plus the extractor L2
// penalty.
MtsslResult pretrain_mtssl(std::span<const Window> unlabelled,
                           const MtsslSetup& setup, const TrainConfig& cfg);

// Per-head accuracy on freshly drawn (window, applied?) examples.
std::vector<double> mtssl_head_accuracy(const models::MtsslNetwork& net,
                                        std::span<const Window> windows,
                                        const MtsslSetup& setup,
                                        std::uint64_t seed);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_MTSSL_H_
