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

#include "siamts/augment/window.h"

#include <algorithm>

#include "siamts/common/error.h"

namespace siamts {
namespace {

template <typename Get>
numerics::Tensor stack(std::size_t n, Get get) {
  if (n == 0) throw DataError("stack_windows: empty batch");
  const numerics::Shape& first = get(0).values.shape();
  if (first.size() != 2) {
    throw DataError("stack_windows: windows must be [T x C], got " +
                    numerics::shape_string(first));
  }
  numerics::Tensor out(numerics::Shape{n, first[0], first[1]});
  const std::size_t stride = first[0] * first[1];
  for (std::size_t i = 0; i < n; ++i) {
    const Window& w = get(i);
    if (w.values.shape() != first) {
      throw DataError("stack_windows: window " + std::to_string(i) +
                      " has shape " + numerics::shape_string(w.values.shape()) +
                      ", expected " + numerics::shape_string(first));
    }
    std::copy_n(w.values.raw(), stride, out.raw() + i * stride);
  }
  return out;
}

}  // namespace

numerics::Tensor stack_windows(std::span<const Window> windows) {
  return stack(windows.size(),
               [&](std::size_t i) -> const Window& { return windows[i]; });
}

numerics::Tensor stack_windows(std::span<const Window* const> windows) {
  return stack(windows.size(),
               [&](std::size_t i) -> const Window& { return *windows[i]; });
}

std::vector<Window> strip_labels(std::span<const Window> windows) {
  std::vector<Window> out(windows.begin(), windows.end());
  for (Window& w : out) w.user_id.reset();
  return out;
}

}  // namespace siamts
