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

#ifndef SIAMTS_TRAINING_EARLY_STOPPING_H_
#define SIAMTS_TRAINING_EARLY_STOPPING_H_

#include <span>

namespace siamts::training {

enum class MetricGoal { kMaximize, kMinimize };

// Tracks the best epoch of a metric sequence. An epoch counts as an
// improvement only when strictly better than the best so far.
class EarlyStopper {
 public:
  EarlyStopper(int patience, MetricGoal goal);

  // Feeds the next epoch's metric; true when it is the new best.
  bool update(double metric);
  bool should_stop() const { return stale_ >= patience_; }
  // 1-based; 0 before the first update.
  int best_epoch() const { return best_epoch_; }
  int epochs_seen() const { return epochs_; }

 private:
  int patience_;
  MetricGoal goal_;
  double best_ = 0.0;
  int best_epoch_ = 0;
  int epochs_ = 0;
  int stale_ = 0;
};

struct StopDecision {
  // 1-based epoch after which training halts (the sequence length when it
  // never triggers).
  int stop_epoch = 0;
  int best_epoch = 0;
  bool stopped_early = false;
};

// Replays `metric` through an EarlyStopper.
StopDecision early_stop(std::span<const double> metric, int patience,
                        MetricGoal goal = MetricGoal::kMaximize);

}  // namespace siamts::training

#endif  // SIAMTS_TRAINING_EARLY_STOPPING_H_
