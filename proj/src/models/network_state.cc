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

#include "siamts/models/network_state.h"

#include <cmath>

#include "siamts/common/error.h"

namespace siamts::models {

void NetworkState::add(std::string name, Tensor value) {
  if (index_.count(name)) {
    throw ConfigError("NetworkState: duplicate parameter '" + name + "'");
  }
  index_.emplace(name, entries_.size());
  entries_.emplace_back(std::move(name), std::move(value));
}

bool NetworkState::contains(std::string_view name) const {
  return index_.find(name) != index_.end();
}

Tensor& NetworkState::at(std::string_view name) {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw ConfigError("NetworkState: no parameter '" + std::string(name) + "'");
  }
  return entries_[it->second].second;
}

const Tensor& NetworkState::at(std::string_view name) const {
  return const_cast<NetworkState*>(this)->at(name);
}

std::size_t NetworkState::parameter_count() const {
  std::size_t n = 0;
  for (const auto& [name, t] : entries_) n += t.size();
  return n;
}

bool NetworkState::all_finite() const {
  for (const auto& [name, t] : entries_) {
    if (!t.all_finite()) return false;
  }
  return true;
}

NetworkState NetworkState::extract(std::string_view prefix) const {
  NetworkState out;
  out.seed = seed;
  for (const auto& [name, t] : entries_) {
    if (name.starts_with(prefix)) out.add(name.substr(prefix.size()), t);
  }
  return out;
}

void NetworkState::merge(std::string_view prefix, const NetworkState& other) {
  for (const auto& [name, t] : other.entries_) {
    add(std::string(prefix) + name, t);
  }
}

Tensor he_uniform(numerics::Shape shape, std::size_t fan_in, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in));
  std::uniform_real_distribution<double> dist(-limit, limit);
  Tensor t(std::move(shape));
  for (double& v : t.data()) v = dist(rng);
  return t;
}

std::vector<Var> bind(numerics::Graph& g, NetworkState& state, bool trainable) {
  std::vector<Var> out;
  out.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    out.push_back(trainable ? g.parameter(&state.tensor(i))
                            : g.frozen(&state.tensor(i)));
  }
  return out;
}

std::vector<Var> bind_frozen(numerics::Graph& g, const NetworkState& state) {
  std::vector<Var> out;
  out.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    out.push_back(g.frozen(&state.tensor(i)));
  }
  return out;
}

std::vector<const Tensor*> gradients(const numerics::Graph& g,
                                     std::span<const Var> bound) {
  std::vector<const Tensor*> out;
  out.reserve(bound.size());
  for (const Var& v : bound) out.push_back(g.grad(v));
  return out;
}

std::vector<Tensor*> tensors(NetworkState& state) {
  std::vector<Tensor*> out;
  out.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) out.push_back(&state.tensor(i));
  return out;
}

}  // namespace siamts::models
