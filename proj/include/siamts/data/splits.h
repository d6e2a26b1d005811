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

#ifndef SIAMTS_DATA_SPLITS_H_
#define SIAMTS_DATA_SPLITS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "siamts/augment/window.h"
#include "siamts/common/random.h"
#include "siamts/data/corpus.h"

namespace siamts::data {

// User-level partition into Dataset 1 and Dataset 2.
struct DatasetSplit {
  std::vector<SessionRecording> d1;
  std::vector<SessionRecording> d2;
};

// Dataset 1 receives round(fraction_d1 * n_users) users drawn uniformly.
// Throws ConfigError when either side would be empty.
DatasetSplit split_dataset(std::span<const SessionRecording> recs,
                           double fraction_d1, Rng& rng);

// Per-user session roles, counted from the highest session id down: the
// last `test` sessions are test data, the `validation` before them
// validation data, then `labelled` labelled-training sessions; every
// earlier session is unlabelled-training data.
struct SessionRoles {
  std::size_t validation = 1;
  std::size_t test = 1;
  std::size_t labelled = 2;
};

// Windowed pools of one dataset. Training pools use the overlapping
// stride, validation and test pools tile without overlap.
struct SplitPools {
  std::vector<Window> unlabelled;
  std::vector<Window> labelled;
  std::vector<Window> validation;
  std::vector<Window> test;
  std::vector<int> users;
};

SplitPools partition_sessions(std::span<const SessionRecording> recs,
                              const SessionRoles& roles, std::size_t steps,
                              double train_overlap = 0.5);

// round(fraction * n_u) windows per user u, drawn uniformly. Subsets are
// nested across fractions for a fixed seed. Throws DataError listing the
// users left without windows.
std::vector<Window> subsample_per_user(std::span<const Window> labelled,
                                       double fraction, std::uint64_t seed);
// min(count, n_u) windows per user, drawn uniformly.
std::vector<Window> take_per_user(std::span<const Window> labelled,
                                  std::size_t count, std::uint64_t seed);

struct ScenarioSplit {
  int scenario = 0;
  std::vector<Window> unlabelled;  // user ids stripped
  std::vector<Window> labelled;
  std::vector<Window> validation;
  std::vector<Window> test;
  // Full labelled pools of the Dataset 1 users (transfer-learning source);
  // only filled for scenario 1.
  std::vector<Window> source_labelled;
  std::vector<Window> source_validation;
};

// Scenario 1: unlabelled Dataset 1, labelled Dataset 2.
// Scenario 2: unlabelled and labelled Dataset 2.
// Scenario 3: unlabelled Dataset 1, labelled Dataset 1 + Dataset 2.
ScenarioSplit make_scenario(int scenario, const SplitPools& d1,
                            const SplitPools& d2, double label_fraction,
                            std::uint64_t seed);

}  // namespace siamts::data

#endif  // SIAMTS_DATA_SPLITS_H_
