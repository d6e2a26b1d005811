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

#ifndef SIAMTS_TRAINING_CONFIG_H_
#define SIAMTS_TRAINING_CONFIG_H_

#include <cstdint>
#include <string>

namespace siamts::training {

struct TrainConfig {
  std::string method;
  double initial_lr = 0.01;
  // lr = initial_lr * decay_rate^(step / decay_steps); decay_steps == 0
  // means one epoch worth of steps.
  double decay_rate = 0.96;
  std::int64_t decay_steps = 0;
  int max_epochs = 30;
  std::size_t batch_size = 32;
  int patience = 5;
  bool early_stopping = true;
  std::uint64_t seed = 0;
  // Classifier training: also update the feature extractor.
  bool finetune_extractor = true;
  // Pre-text training: wrap the target embeddings in stop_gradient.
  bool stop_gradient = true;

  // Throws ConfigError on a non-positive lr, epochs, batch or patience.
  void validate() const;
};

// Pre-text defaults: lr 3e-5, 30 epochs.
TrainConfig default_pretrain_config();
// Classifier defaults: lr 0.01, 30 epochs, fine-tuning on.
TrainConfig default_classifier_config();

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_CONFIG_H_
