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

#ifndef SIAMTS_CLI_FILES_H_
#define SIAMTS_CLI_FILES_H_

#include <filesystem>
#include <string>

namespace siamts::cli {

// Writes `content` to a sibling temporary file and renames it over `path`,
// so readers never observe a partial file. Throws DataError when the
// directory is not writable.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace siamts::cli

#endif  // SIAMTS_CLI_FILES_H_
