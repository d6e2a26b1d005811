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

#include "siamts/training/common.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "siamts/common/error.h"

namespace siamts::training {

void TrainConfig::validate() const {
  if (!(initial_lr > 0.0)) throw ConfigError("train: initial_lr must be > 0");
  if (!(decay_rate > 0.0)) throw ConfigError("train: decay_rate must be > 0");
  if (decay_steps < 0) throw ConfigError("train: decay_steps must be >= 0");
  if (max_epochs < 1) throw ConfigError("train: max_epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("train: batch_size must be >= 1");
  if (patience < 1) throw ConfigError("train: patience must be >= 1");
}

TrainConfig default_pretrain_config() {
  TrainConfig cfg;
  cfg.method = "simsiam";
  cfg.initial_lr = 3e-5;
  cfg.max_epochs = 30;
  return cfg;
}

TrainConfig default_classifier_config() {
  TrainConfig cfg;
  cfg.method = "classifier";
  cfg.initial_lr = 0.01;
  cfg.max_epochs = 30;
  return cfg;
}

std::vector<std::vector<std::size_t>> epoch_batches(std::size_t n,
                                                    std::size_t batch_size,
                                                    Rng& rng,
                                                    std::size_t min_batch) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; start += batch_size) {
    const std::size_t end = std::min(n, start + batch_size);
    if (end - start < min_batch) break;
    out.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

Optimizer::Optimizer(const TrainConfig& cfg, std::size_t steps_per_epoch)
    : initial_lr_(cfg.initial_lr), decay_rate_(cfg.decay_rate),
      decay_steps_(cfg.decay_steps > 0
                       ? cfg.decay_steps
                       : std::max<std::int64_t>(
                             1, static_cast<std::int64_t>(steps_per_epoch))) {}

double Optimizer::learning_rate() const {
  return numerics::decayed_lr(initial_lr_, state_.step, decay_rate_,
                              decay_steps_);
}

void Optimizer::step(std::span<numerics::Tensor* const> params,
                     std::span<const numerics::Tensor* const> grads) {
  numerics::adam_step(params, grads, state_, learning_rate());
}

LabelMap::LabelMap(std::span<const Window> train) {
  std::set<int> users;
  for (const Window& w : train) {
    if (!w.user_id) throw DataError("labelled window without a user id");
    users.insert(*w.user_id);
  }
  users_.assign(users.begin(), users.end());
}

LabelMap::LabelMap(std::vector<int> users) : users_(std::move(users)) {
  std::sort(users_.begin(), users_.end());
  users_.erase(std::unique(users_.begin(), users_.end()), users_.end());
}

std::vector<int> LabelMap::labels(std::span<const Window> windows,
                                  const char* what) const {
  std::vector<int> out;
  out.reserve(windows.size());
  std::set<int> missing;
  for (const Window& w : windows) {
    if (!w.user_id) {
      throw DataError(std::string(what) + ": window without a user id");
    }
    auto it = std::lower_bound(users_.begin(), users_.end(), *w.user_id);
    if (it == users_.end() || *it != *w.user_id) {
      missing.insert(*w.user_id);
      out.push_back(-1);
    } else {
      out.push_back(static_cast<int>(it - users_.begin()));
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (int u : missing) list += (list.empty() ? "" : ", ") + std::to_string(u);
    throw DataError(std::string(what) +
                    ": users absent from the training data: " + list);
  }
  return out;
}

std::vector<Window> probe_subset(std::span<const Window> windows,
                                 std::size_t limit) {
  std::vector<Window> out;
  const std::size_t n = windows.size();
  const std::size_t take = std::min(n, limit);
  for (std::size_t i = 0; i < take; ++i) out.push_back(windows[i * n / take]);
  return out;
}

}  // namespace siamts::training
