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

#ifndef SIAMTS_ANALYSIS_SWEEP_H_
#define SIAMTS_ANALYSIS_SWEEP_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siamts/analysis/experiment.h"
#include "siamts/analysis/serialization.h"

namespace siamts::analysis {

enum class SweepVariable {
  kAugmentationPair,
  kFeConfig,
  kPredictorDepth,
  kWeightDecay,
};

std::string_view to_string(SweepVariable variable);
SweepVariable parse_sweep_variable(std::string_view name);

// Candidate encodings: augmentation_pair = list of augmentation specs,
// fe_config = filter list, predictor_depth = width list, weight_decay =
// number.
struct SweepSpec {
  SweepVariable variable = SweepVariable::kWeightDecay;
  std::vector<Json> candidates;
  std::vector<ProbeSetting> settings{ProbeSetting::kEx1, ProbeSetting::kEx2};
  int runs_per_point = 10;
  std::uint64_t base_seed = 0;
  ExperimentConfig baseline;

  void validate() const;
};

ExperimentConfig apply_candidate(const ExperimentConfig& base,
                                 SweepVariable variable, const Json& value);

struct SweepPoint {
  Json value;
  ProbeSetting setting = ProbeSetting::kEx1;
  std::vector<double> kappas;
  int failed = 0;
  std::vector<std::string> errors;
  double mean = 0.0;
  double std = 0.0;
};

struct SweepTable {
  SweepVariable variable = SweepVariable::kWeightDecay;
  // Candidate-major, then setting.
  std::vector<SweepPoint> points;
  // Resolved experiment config per candidate.
  std::vector<Json> configs;
};

// For every candidate and run: pre-train once (seed base_seed + run), then
// probe each setting. Failed runs are counted, not averaged.
SweepTable run_sweep(const SweepSpec& spec,
                     std::span<const data::SessionRecording> recs, int threads);

// One row per candidate; per setting the columns mean, std, runs, failed.
void write_sweep_csv(std::ostream& out, const SweepTable& table);
Json to_json(const SweepTable& table);

}  // namespace siamts::analysis

#endif  // SIAMTS_ANALYSIS_SWEEP_H_
