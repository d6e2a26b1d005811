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

#ifndef SIAMTS_CLI_RUN_CONFIG_H_
#define SIAMTS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "siamts/analysis/experiment.h"
#include "siamts/analysis/serialization.h"
#include "siamts/analysis/sweep.h"
#include "siamts/data/corpus.h"
#include "siamts/data/synth.h"

namespace siamts::cli {

using analysis::Json;

// Where the recordings come from: a corpus on disk, or the synthetic
// generator seeded with `seed`.
struct CorpusSource {
  std::string path;  // empty = synthetic
  std::string format = "auto";
  data::SynthParams synth;
};

struct RunConfig {
  std::string profile = "synth";
  CorpusSource corpus;
  int scenario = 2;
  std::vector<analysis::Method> methods{analysis::Method::kSimSiam};
  std::vector<double> fractions{0.1, 0.2, 0.4, 0.7, 1.0};
  analysis::ExperimentConfig experiment;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  int runs = 10;

  // Fractions in (0, 1], a known scenario, and every method allowed in it.
  void validate() const;
};

struct SweepConfig {
  std::string profile = "synth";
  CorpusSource corpus;
  analysis::SweepSpec sweep;
  std::string out_dir = "out";
};

struct SynthConfig {
  std::string profile = "synth";
  data::SynthParams synth;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
};

// Overrides given on the command line; they win over the config file.
struct Overrides {
  std::optional<std::string> profile;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
};

// Synthetic generator defaults matching a profile's channel count, with
// sessions five windows long.
data::SynthParams default_synth_params(const data::DatasetProfile& profile);

// The "profile" key (or override) selects the defaults that every other key
// refines. Unknown keys throw ConfigError.
RunConfig run_config_from_json(const Json& j, const Overrides& overrides = {});
Json to_json(const RunConfig& cfg);

SweepConfig sweep_config_from_json(const Json& j,
                                   const Overrides& overrides = {});
Json to_json(const SweepConfig& cfg);

SynthConfig synth_config_from_json(const Json& j,
                                   const Overrides& overrides = {});
Json to_json(const SynthConfig& cfg);

// Recordings for a corpus source; synthetic corpora are drawn from `seed`.
std::vector<data::SessionRecording> load_recordings(const CorpusSource& source,
                                                    std::uint64_t seed);

}  // namespace siamts::cli

#endif  // SIAMTS_CLI_RUN_CONFIG_H_
