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

#ifndef SIAMTS_TRAINING_COMMON_H_
#define SIAMTS_TRAINING_COMMON_H_

#include <cstdint>
#include <span>
#include <vector>

#include "siamts/augment/window.h"
#include "siamts/common/random.h"
#include "siamts/models/network_state.h"
#include "siamts/numerics/adam.h"
#include "siamts/training/config.h"

namespace siamts::training {

// Random streams derived from TrainConfig::seed.
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kShuffleStream = 2;
inline constexpr std::uint64_t kAugmentStream = 3;

// Index batches of one epoch: a fresh permutation cut into `batch_size`
// chunks. A trailing chunk smaller than `min_batch` is dropped.
std::vector<std::vector<std::size_t>> epoch_batches(std::size_t n,
                                                    std::size_t batch_size,
                                                    Rng& rng,
                                                    std::size_t min_batch = 1);

// Adam with the decayed learning-rate schedule of a TrainConfig.
class Optimizer {
 public:
  Optimizer(const TrainConfig& cfg, std::size_t steps_per_epoch);

  double learning_rate() const;
  void step(std::span<numerics::Tensor* const> params,
            std::span<const numerics::Tensor* const> grads);
  std::int64_t steps() const { return state_.step; }

 private:
  double initial_lr_;
  double decay_rate_;
  std::int64_t decay_steps_;
  numerics::AdamState state_;
};

// Dense class indices for user ids: classes are the sorted distinct users
// of the training windows.
class LabelMap {
 public:
  explicit LabelMap(std::span<const Window> train);
  explicit LabelMap(std::vector<int> users);

  const std::vector<int>& users() const { return users_; }
  std::size_t size() const { return users_.size(); }
  // Throws DataError listing every user of `windows` with no class, or a
  // window without a user id.
  std::vector<int> labels(std::span<const Window> windows,
                          const char* what) const;

 private:
  std::vector<int> users_;
};

// Evenly spaced subset of at most `limit` windows.
std::vector<Window> probe_subset(std::span<const Window> windows,
                                 std::size_t limit);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_COMMON_H_
