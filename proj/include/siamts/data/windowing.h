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

#ifndef SIAMTS_DATA_WINDOWING_H_
#define SIAMTS_DATA_WINDOWING_H_

#include <span>
#include <string>
#include <vector>

#include "siamts/augment/window.h"
#include "siamts/data/corpus.h"

namespace siamts::data {

// round(steps * (1 - overlap)), at least 1.
std::size_t window_stride(std::size_t steps, double overlap);

// Start offsets of every full window of `steps` samples in a recording of
// `length` samples.
std::vector<std::size_t> window_offsets(std::size_t length, std::size_t steps,
                                        std::size_t stride);

// Cuts every recording into [steps x C] windows. Windows never cross
// session boundaries and inherit the user and session ids. Recordings
// shorter than `steps` are skipped; a note is appended to `warnings` (or
// printed to stderr when it is null).
std::vector<Window> window_sessions(std::span<const SessionRecording> recs,
                                    std::size_t steps, double overlap,
                                    std::vector<std::string>* warnings = nullptr);

}  // namespace siamts::data

#endif  // SIAMTS_DATA_WINDOWING_H_
