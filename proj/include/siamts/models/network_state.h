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

#ifndef SIAMTS_MODELS_NETWORK_STATE_H_
#define SIAMTS_MODELS_NETWORK_STATE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siamts/common/random.h"
#include "siamts/numerics/graph.h"
#include "siamts/numerics/tensor.h"

namespace siamts::models {

using numerics::Tensor;
using numerics::Var;

// Named learnable tensors in a fixed insertion order.
class NetworkState {
 public:
  void add(std::string name, Tensor value);

  bool contains(std::string_view name) const;
  Tensor& at(std::string_view name);
  const Tensor& at(std::string_view name) const;
  Tensor& tensor(std::size_t i) { return entries_[i].second; }
  const Tensor& tensor(std::size_t i) const { return entries_[i].second; }
  const std::string& name(std::size_t i) const { return entries_[i].first; }

  std::size_t size() const { return entries_.size(); }
  std::size_t parameter_count() const;
  bool all_finite() const;

  // Copy of the entries whose name starts with `prefix`, prefix removed.
  NetworkState extract(std::string_view prefix) const;
  // Appends every entry of `other` under `prefix`.
  void merge(std::string_view prefix, const NetworkState& other);

  std::uint64_t seed = 0;

  friend bool operator==(const NetworkState& a, const NetworkState& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<std::pair<std::string, Tensor>> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// He-uniform initialized weights, U(-sqrt(6 / fan_in), +sqrt(6 / fan_in)).
Tensor he_uniform(numerics::Shape shape, std::size_t fan_in, Rng& rng);

// Binds every tensor of `state` into `g` (trainable: gradient leaves,
// otherwise frozen views), in state order.
std::vector<Var> bind(numerics::Graph& g, NetworkState& state, bool trainable);
std::vector<Var> bind_frozen(numerics::Graph& g, const NetworkState& state);

// Gradients of the bound leaves (null where none arrived).
std::vector<const Tensor*> gradients(const numerics::Graph& g,
                                     std::span<const Var> bound);
std::vector<Tensor*> tensors(NetworkState& state);

}  // namespace siamts::models

#endif  // SIAMTS_MODELS_NETWORK_STATE_H_
