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

#ifndef SIAMTS_DATA_CORPUS_IO_H_
#define SIAMTS_DATA_CORPUS_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "siamts/data/corpus.h"

namespace siamts::data {

inline constexpr char kCorpusMagic[4] = {'S', 'T', 'S', 'D'};
inline constexpr std::uint32_t kCorpusVersion = 1;

enum class CorpusFormat { kAuto, kCsv, kStsd };

CorpusFormat parse_corpus_format(const std::string& name);

// CSV layout: header `user_id,session_id,c0,...,c{C-1}`, one row per time
// step. Consecutive rows sharing (user_id, session_id) form one session.
// `source` labels error messages.
std::vector<SessionRecording> read_csv_corpus(std::istream& in,
                                              const std::string& source);
void write_csv_session(std::ostream& out, const SessionRecording& rec);

void write_stsd(std::ostream& out, const std::vector<SessionRecording>& recs);
std::vector<SessionRecording> read_stsd(std::istream& in);

void save_stsd(const std::filesystem::path& path,
               const std::vector<SessionRecording>& recs);

// kAuto picks by extension (.csv / anything else = STSD). A directory loads
// every *.csv file inside it in lexicographic order.
std::vector<SessionRecording> load_corpus(
    const std::filesystem::path& path, CorpusFormat format = CorpusFormat::kAuto);

}  // namespace siamts::data

#endif  // SIAMTS_DATA_CORPUS_IO_H_
