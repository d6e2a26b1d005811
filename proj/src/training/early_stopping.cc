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

#include "siamts/training/early_stopping.h"

#include "siamts/common/error.h"

namespace siamts::training {

EarlyStopper::EarlyStopper(int patience, MetricGoal goal)
    : patience_(patience), goal_(goal) {
  if (patience < 1) throw ConfigError("early stopping: patience must be >= 1");
}

bool EarlyStopper::update(double metric) {
  ++epochs_;
  const bool better = best_epoch_ == 0 ||
                      (goal_ == MetricGoal::kMaximize ? metric > best_
                                                      : metric < best_);
  if (better) {
    best_ = metric;
    best_epoch_ = epochs_;
    stale_ = 0;
  } else {
    ++stale_;
  }
  return better;
}

StopDecision early_stop(std::span<const double> metric, int patience,
                        MetricGoal goal) {
  EarlyStopper stopper(patience, goal);
  StopDecision d;
  for (double m : metric) {
    stopper.update(m);
    if (stopper.should_stop()) {
      d.stopped_early = true;
      break;
    }
  }
  d.stop_epoch = stopper.epochs_seen();
  d.best_epoch = stopper.best_epoch();
  return d;
}

}  // namespace siamts::training
