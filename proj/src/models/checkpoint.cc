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

#include "siamts/models/checkpoint.h"

#include <fstream>
#include <string>

#include "siamts/common/binary_io.h"
#include "siamts/common/error.h"

namespace siamts::models {

void write_checkpoint(std::ostream& out, const NetworkState& state) {
  out.write(kCheckpointMagic, 4);
  io::write_u32(out, kCheckpointVersion);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const std::string& name = state.name(i);
    const Tensor& t = state.tensor(i);
    io::write_u32(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    io::write_u32(out, static_cast<std::uint32_t>(t.rank()));
    for (std::size_t d : t.shape()) io::write_u32(out, static_cast<std::uint32_t>(d));
    for (double v : t.data()) io::write_f32(out, v);
  }
  if (!out) throw DataError("checkpoint: write failed");
}

NetworkState read_checkpoint(std::istream& in) {
  char magic[4];
  io::read_exact(in, magic, 4, "checkpoint magic");
  if (std::string(magic, 4) != std::string(kCheckpointMagic, 4)) {
    throw DataError("checkpoint: bad magic, not an STSM file");
  }
  const std::uint32_t version = io::read_u32(in, "checkpoint version");
  if (version != kCheckpointVersion) {
    throw DataError("checkpoint: unsupported version " +
                    std::to_string(version));
  }
  NetworkState state;
  while (in.peek() != std::char_traits<char>::eof()) {
    const std::uint32_t len = io::read_u32(in, "parameter name length");
    std::string name(len, '\0');
    io::read_exact(in, name.data(), len, "parameter name");
    const std::uint32_t rank = io::read_u32(in, "rank of '" + name + "'");
    numerics::Shape shape(rank);
    for (auto& d : shape) d = io::read_u32(in, "extents of '" + name + "'");
    Tensor t(shape);
    for (double& v : t.data()) v = io::read_f32(in, "values of '" + name + "'");
    state.add(std::move(name), std::move(t));
  }
  return state;
}

void save_checkpoint(const std::filesystem::path& path,
                     const NetworkState& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("checkpoint: cannot open " + path.string());
  write_checkpoint(out, state);
}

NetworkState load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("checkpoint: cannot open " + path.string());
  return read_checkpoint(in);
}

}  // namespace siamts::models
