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

#ifndef SIAMTS_TRAINING_TRACE_H_
#define SIAMTS_TRAINING_TRACE_H_

#include <optional>
#include <ostream>
#include <vector>

namespace siamts::training {

// Per-epoch record of one training run. Epochs are 1-based in the CSV.
struct TrainTrace {
  std::vector<double> loss;
  std::vector<std::optional<double>> val_metric;
  std::vector<std::optional<double>> collapse_stat;
  int stopped_epoch = 0;
  // Epoch whose state was returned.
  int best_epoch = 0;

  std::size_t epochs() const { return loss.size(); }

  friend bool operator==(const TrainTrace&, const TrainTrace&) = default;
};

// Header `epoch,loss,val_metric,collapse_stat`; absent values are empty.
void write_trace_csv(std::ostream& out, const TrainTrace& trace);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_TRACE_H_
