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

#ifndef SIAMTS_AUGMENT_WINDOW_H_
#define SIAMTS_AUGMENT_WINDOW_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siamts/numerics/tensor.h"

namespace siamts {

// One model input: `values` is [T x C] (time steps x channels). Windows in
// unlabelled pools carry no user id.
struct Window {
  numerics::Tensor values;
  std::optional<int> user_id;
  int session_id = 0;
  std::string source;

  std::size_t steps() const { return values.dim(0); }
  std::size_t channels() const { return values.dim(1); }
  double& at(std::size_t t, std::size_t c) { return values.at(t, c); }
  double at(std::size_t t, std::size_t c) const { return values.at(t, c); }
};

// Stacks equally shaped windows into a [B x T x C] batch.
numerics::Tensor stack_windows(std::span<const Window> windows);
numerics::Tensor stack_windows(std::span<const Window* const> windows);

// Copies of `windows` with the user id removed.
std::vector<Window> strip_labels(std::span<const Window> windows);

}  // namespace siamts

#endif  // SIAMTS_AUGMENT_WINDOW_H_
