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

#ifndef SIAMTS_MODELS_CHECKPOINT_H_
#define SIAMTS_MODELS_CHECKPOINT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "siamts/models/network_state.h"

namespace siamts::models {

// Binary checkpoint layout, all integers little-endian u32:
//   "STSM" | version | records...
//   record = name_len | name bytes | rank | extents[rank] | f32 payload
// Records run to end of file. Values are stored as 32-bit floats.
inline constexpr char kCheckpointMagic[4] = {'S', 'T', 'S', 'M'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

void write_checkpoint(std::ostream& out, const NetworkState& state);
NetworkState read_checkpoint(std::istream& in);

void save_checkpoint(const std::filesystem::path& path,
                     const NetworkState& state);
NetworkState load_checkpoint(const std::filesystem::path& path);

}  // namespace siamts::models

#endif  // SIAMTS_MODELS_CHECKPOINT_H_
