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

#include "siamts/data/windowing.h"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "siamts/common/error.h"

namespace siamts::data {

std::size_t window_stride(std::size_t steps, double overlap) {
  if (!(overlap >= 0.0 && overlap < 1.0)) {
    throw ConfigError("windowing: overlap must lie in [0, 1)");
  }
  const long stride =
      std::lround(static_cast<double>(steps) * (1.0 - overlap));
  return static_cast<std::size_t>(std::max(1L, stride));
}

std::vector<std::size_t> window_offsets(std::size_t length, std::size_t steps,
                                        std::size_t stride) {
  std::vector<std::size_t> offsets;
  if (steps == 0 || stride == 0 || length < steps) return offsets;
  for (std::size_t off = 0; off + steps <= length; off += stride) {
    offsets.push_back(off);
  }
  return offsets;
}

std::vector<Window> window_sessions(std::span<const SessionRecording> recs,
                                    std::size_t steps, double overlap,
                                    std::vector<std::string>* warnings) {
  if (steps == 0) throw ConfigError("windowing: window length must be >= 1");
  const std::size_t stride = window_stride(steps, overlap);
  std::vector<Window> out;
  for (const SessionRecording& rec : recs) {
    if (rec.length() < steps) {
      const std::string note =
          "windowing: skipping user " + std::to_string(rec.user_id) +
          " session " + std::to_string(rec.session_id) + " (" +
          std::to_string(rec.length()) + " samples < window " +
          std::to_string(steps) + ")";
      if (warnings) {
        warnings->push_back(note);
      } else {
        std::cerr << "warning: " << note << '\n';
      }
      continue;
    }
    const std::size_t channels = rec.channels();
    for (std::size_t off : window_offsets(rec.length(), steps, stride)) {
      Window w;
      w.values = numerics::Tensor(numerics::Shape{steps, channels});
      std::copy_n(rec.samples.raw() + off * channels, steps * channels,
                  w.values.raw());
      w.user_id = rec.user_id;
      w.session_id = rec.session_id;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace siamts::data
