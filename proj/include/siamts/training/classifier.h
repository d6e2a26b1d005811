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

#ifndef SIAMTS_TRAINING_CLASSIFIER_H_
#define SIAMTS_TRAINING_CLASSIFIER_H_

#include <optional>
#include <span>
#include <vector>

#include "siamts/augment/transforms.h"
#include "siamts/augment/window.h"
#include "siamts/metrics/metrics.h"
#include "siamts/models/networks.h"
#include "siamts/training/config.h"
#include "siamts/training/trace.h"

namespace siamts::training {

struct ClassifierResult {
  models::ClassifierNetwork network;
  TrainTrace trace;
  // users()[k] is the user id of class k.
  std::vector<int> classes;
};

struct Evaluation {
  metrics::PredictionSet predictions;
  double accuracy = 0.0;
  // Empty when kappa is undefined (single class in truth and prediction).
  std::optional<double> kappa;
};

// Trains a fresh classification head on top of `extractor` (copied). With
// cfg.finetune_extractor the extractor is updated too, carrying its L2
// penalty; otherwise its parameters stay bitwise unchanged. Early stopping
// watches validation kappa (accuracy when kappa is undefined).
ClassifierResult train_classifier(const models::FeatureExtractor& extractor,
                                  std::span<const Window> train,
                                  std::span<const Window> validation,
                                  const TrainConfig& cfg);

// Classifier with a randomly initialized extractor.
ClassifierResult train_supervised(std::span<const Window> train,
                                  std::span<const Window> validation,
                                  const models::FeatureExtractorSpec& fe_spec,
                                  const TrainConfig& cfg);

struct AugmentedSetup {
  augment::AugmentationSpec scaling =
      augment::AugmentationSpec::defaults(augment::AugmentationKind::kRandomScaling);
  augment::AugmentationSpec jitter =
      augment::AugmentationSpec::defaults(augment::AugmentationKind::kJitter);
  int copies = 1;
};

// Originals, then `copies` scaled copies, then `copies` jittered copies;
// drawn once up front.
std::vector<Window> augment_training_set(std::span<const Window> train,
                                         const AugmentedSetup& setup,
                                         std::uint64_t seed);

ClassifierResult train_augmented(std::span<const Window> train,
                                 std::span<const Window> validation,
                                 const models::FeatureExtractorSpec& fe_spec,
                                 const TrainConfig& cfg,
                                 const AugmentedSetup& setup = {});

// Stage 1: supervised training on the source users. Stage 2: a new head for
// the target users and fine-tuning of every parameter.
ClassifierResult transfer_learn(std::span<const Window> source_train,
                                std::span<const Window> source_validation,
                                std::span<const Window> target_train,
                                std::span<const Window> target_validation,
                                const models::FeatureExtractorSpec& fe_spec,
                                const TrainConfig& cfg);

Evaluation evaluate(const ClassifierResult& model,
                    std::span<const Window> windows);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_CLASSIFIER_H_
