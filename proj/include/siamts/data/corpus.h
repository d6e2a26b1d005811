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

#ifndef SIAMTS_DATA_CORPUS_H_
#define SIAMTS_DATA_CORPUS_H_

#include <string>
#include <vector>

#include "siamts/augment/transforms.h"
#include "siamts/numerics/tensor.h"

namespace siamts::data {

// One continuous recording sitting of one user; `samples` is [L x C].
struct SessionRecording {
  int user_id = 0;
  int session_id = 0;
  numerics::Tensor samples;
  double sample_rate = 0.0;

  std::size_t length() const { return samples.dim(0); }
  std::size_t channels() const { return samples.dim(1); }
};

// Input geometry and training defaults of a dataset.
struct DatasetProfile {
  std::string name;
  std::size_t steps = 0;     // T
  std::size_t channels = 0;  // C
  int pretrain_epochs = 0;
  std::vector<std::size_t> filters;
  std::vector<augment::AugmentationSpec> pair_recipe;
  std::vector<augment::AugmentationSpec> mtssl_recipe;
  // Balanced labelled windows per user in the frozen-probe experiments.
  std::size_t probe_samples_per_user = 0;
};

DatasetProfile musicid_profile();
DatasetProfile mmi_profile();
// Desk-scale synthetic corpus geometry: T = 30, C = 8.
DatasetProfile synth_profile();
// "musicid", "mmi" or "synth".
DatasetProfile profile_by_name(const std::string& name);

// Sorted distinct user ids.
std::vector<int> user_ids(const std::vector<SessionRecording>& recs);

}  // namespace siamts::data

#endif  // SIAMTS_DATA_CORPUS_H_
