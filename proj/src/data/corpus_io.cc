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

#include "siamts/data/corpus_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "siamts/common/binary_io.h"
#include "siamts/common/error.h"

namespace siamts::data {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view f = line.substr(start, comma - start);
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) {
      f.remove_suffix(1);
    }
    out.push_back(f);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

template <typename T>
T parse_number(std::string_view field, const std::string& column,
               const std::string& source, std::size_t line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw DataError(where(source, line) + "cannot parse column '" + column +
                    "' value '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "auto") return CorpusFormat::kAuto;
  if (name == "csv") return CorpusFormat::kCsv;
  if (name == "stsd") return CorpusFormat::kStsd;
  throw ConfigError("unknown corpus format '" + name + "' (auto|csv|stsd)");
}

std::vector<SessionRecording> read_csv_corpus(std::istream& in,
                                              const std::string& source) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, text)) {
    ++line_no;
    if (split_fields(text).size() == 1 && split_fields(text)[0].empty()) continue;
    for (auto f : split_fields(text)) header.emplace_back(f);
    break;
  }
  if (header.empty()) throw DataError(where(source, line_no) + "missing header");
  if (header.size() < 1 || header[0] != "user_id") {
    throw DataError(where(source, line_no) + "missing column 'user_id'");
  }
  if (header.size() < 2 || header[1] != "session_id") {
    throw DataError(where(source, line_no) + "missing column 'session_id'");
  }
  if (header.size() < 3) {
    throw DataError(where(source, line_no) + "missing column 'c0'");
  }
  const std::size_t channels = header.size() - 2;
  for (std::size_t c = 0; c < channels; ++c) {
    const std::string expected = "c" + std::to_string(c);
    if (header[c + 2] != expected) {
      throw DataError(where(source, line_no) + "missing column '" + expected +
                      "' (found '" + header[c + 2] + "')");
    }
  }

  struct Pending {
    int user = 0;
    int session = 0;
    std::vector<double> values;
  };
  std::vector<Pending> sessions;
  while (std::getline(in, text)) {
    ++line_no;
    const auto fields = split_fields(text);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != header.size()) {
      throw DataError(where(source, line_no) + "expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    const int user = parse_number<int>(fields[0], "user_id", source, line_no);
    const int session =
        parse_number<int>(fields[1], "session_id", source, line_no);
    if (sessions.empty() || sessions.back().user != user ||
        sessions.back().session != session) {
      sessions.push_back({user, session, {}});
    }
    for (std::size_t c = 0; c < channels; ++c) {
      const double v =
          parse_number<double>(fields[c + 2], header[c + 2], source, line_no);
      if (!std::isfinite(v)) {
        throw DataError(where(source, line_no) + "non-finite value in column '" +
                        header[c + 2] + "'");
      }
      sessions.back().values.push_back(v);
    }
  }

  std::vector<SessionRecording> out;
  for (auto& p : sessions) {
    SessionRecording rec;
    rec.user_id = p.user;
    rec.session_id = p.session;
    const std::size_t length = p.values.size() / channels;
    rec.samples = numerics::Tensor(numerics::Shape{length, channels},
                                   std::move(p.values));
    out.push_back(std::move(rec));
  }
  return out;
}

void write_csv_session(std::ostream& out, const SessionRecording& rec) {
  out << "user_id,session_id";
  for (std::size_t c = 0; c < rec.channels(); ++c) out << ",c" << c;
  out << '\n';
  out.precision(17);
  for (std::size_t t = 0; t < rec.length(); ++t) {
    out << rec.user_id << ',' << rec.session_id;
    for (std::size_t c = 0; c < rec.channels(); ++c) {
      out << ',' << rec.samples.at(t, c);
    }
    out << '\n';
  }
}

void write_stsd(std::ostream& out, const std::vector<SessionRecording>& recs) {
  out.write(kCorpusMagic, 4);
  io::write_u32(out, kCorpusVersion);
  io::write_u32(out, static_cast<std::uint32_t>(recs.size()));
  for (const auto& r : recs) {
    if (r.user_id < 0 || r.session_id < 0) {
      throw DataError("stsd: negative user/session id cannot be stored");
    }
    io::write_u32(out, static_cast<std::uint32_t>(r.user_id));
    io::write_u32(out, static_cast<std::uint32_t>(r.session_id));
    io::write_u32(out, static_cast<std::uint32_t>(r.length()));
    io::write_u32(out, static_cast<std::uint32_t>(r.channels()));
    for (double v : r.samples.data()) io::write_f32(out, v);
  }
  if (!out) throw DataError("stsd: write failed");
}

std::vector<SessionRecording> read_stsd(std::istream& in) {
  char magic[4];
  io::read_exact(in, magic, 4, "corpus magic");
  if (std::string(magic, 4) != std::string(kCorpusMagic, 4)) {
    throw DataError("stsd: bad magic, not an STSD file");
  }
  const std::uint32_t version = io::read_u32(in, "corpus version");
  if (version != kCorpusVersion) {
    throw DataError("stsd: unsupported version " + std::to_string(version));
  }
  const std::uint32_t n = io::read_u32(in, "session count");
  std::vector<SessionRecording> out;
  out.reserve(n);
  std::size_t channels = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::string what = "session " + std::to_string(i);
    SessionRecording rec;
    rec.user_id = static_cast<int>(io::read_u32(in, what + " user_id"));
    rec.session_id = static_cast<int>(io::read_u32(in, what + " session_id"));
    const std::size_t length = io::read_u32(in, what + " length");
    const std::size_t c = io::read_u32(in, what + " channels");
    if (i == 0) channels = c;
    if (c != channels) {
      throw DataError("stsd: inconsistent channel count in " + what + ": " +
                      std::to_string(c) + " vs " + std::to_string(channels));
    }
    rec.samples = numerics::Tensor(numerics::Shape{length, c});
    for (double& v : rec.samples.data()) v = io::read_f32(in, what + " payload");
    out.push_back(std::move(rec));
  }
  return out;
}

void save_stsd(const std::filesystem::path& path,
               const std::vector<SessionRecording>& recs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_stsd(out, recs);
}

std::vector<SessionRecording> load_corpus(const std::filesystem::path& path,
                                          CorpusFormat format) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw DataError("corpus not found: " + path.string());

  std::vector<SessionRecording> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".csv") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw DataError("no .csv files in " + path.string());
    for (const auto& f : files) {
      auto part = load_corpus(f, CorpusFormat::kCsv);
      for (auto& r : part) out.push_back(std::move(r));
    }
  } else {
    if (format == CorpusFormat::kAuto) {
      format = path.extension() == ".csv" ? CorpusFormat::kCsv
                                          : CorpusFormat::kStsd;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    out = format == CorpusFormat::kCsv ? read_csv_corpus(in, path.string())
                                       : read_stsd(in);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].channels() != out[0].channels()) {
      throw DataError("inconsistent channel count: session " +
                      std::to_string(out[i].session_id) + " of user " +
                      std::to_string(out[i].user_id) + " has " +
                      std::to_string(out[i].channels()) + ", expected " +
                      std::to_string(out[0].channels()));
    }
  }
  return out;
}

}  // namespace siamts::data
