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

#ifndef SIAMTS_ANALYSIS_EXPERIMENT_H_
#define SIAMTS_ANALYSIS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siamts/data/corpus.h"
#include "siamts/data/splits.h"
#include "siamts/models/feature_extractor.h"
#include "siamts/training/classifier.h"
#include "siamts/training/config.h"
#include "siamts/training/mtssl.h"
#include "siamts/training/simsiam.h"

namespace siamts::analysis {

enum class Method { kSimSiam, kMtssl, kSupervised, kAugmented, kTransfer };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);
// Transfer learning only exists for scenario 1; throws ConfigError
// otherwise.
void check_method_for_scenario(Method method, int scenario);

// Frozen-extractor probes: the classifier is trained on the pre-training
// users (Ex1) or on the disjoint Dataset 2 users (Ex2).
enum class ProbeSetting { kEx1, kEx2 };

std::string_view to_string(ProbeSetting setting);
ProbeSetting parse_probe_setting(std::string_view name);

// Everything one pre-train + downstream run needs besides data and seed.
struct ExperimentConfig {
  std::size_t steps = 30;
  double fraction_d1 = 1.0 / 3.0;
  data::SessionRoles roles;
  double train_overlap = 0.5;
  // Shared by every method; replaces simsiam.extractor and mtssl.extractor.
  models::FeatureExtractorSpec extractor;
  training::SimSiamSetup simsiam;
  training::MtsslSetup mtssl;
  training::AugmentedSetup augmented;
  training::TrainConfig pretrain = training::default_pretrain_config();
  training::TrainConfig classifier = training::default_classifier_config();
  std::size_t probe_samples_per_user = 60;

  void validate() const;
};

// Profile-driven defaults: window length, extractor filters, pre-training
// epochs, augmentation recipes and probe size.
ExperimentConfig default_experiment(const data::DatasetProfile& profile);

training::SimSiamSetup simsiam_setup(const ExperimentConfig& cfg);
training::MtsslSetup mtssl_setup(const ExperimentConfig& cfg);

struct PreparedData {
  data::SplitPools d1;
  data::SplitPools d2;
};

// User split (Dataset 1 / Dataset 2) and per-user session roles; the user
// draw depends only on `seed`.
PreparedData prepare_data(std::span<const data::SessionRecording> recs,
                          const ExperimentConfig& cfg, std::uint64_t seed);

struct CellResult {
  Method method = Method::kSimSiam;
  double fraction = 1.0;
  int run = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string error;
  std::optional<double> kappa;
  double accuracy = 0.0;
  // Final pre-training epoch, SimSiam only.
  std::optional<double> collapse_stat;
  int stopped_epoch = 0;
};

// One run of one method over every label fraction. Pre-training (when the
// method has one) happens once and is shared by the fractions. A failure is
// recorded in the rows rather than thrown.
std::vector<CellResult> run_method(const ExperimentConfig& cfg,
                                   const PreparedData& data, int scenario,
                                   Method method,
                                   std::span<const double> fractions, int run,
                                   std::uint64_t seed);

// Every (method, run) pair, runs seeded base_seed + run, executed on up to
// `threads` workers. Rows come back in (method, run, fraction) order.
std::vector<CellResult> run_scenario(
    const ExperimentConfig& cfg, std::span<const data::SessionRecording> recs,
    int scenario, std::span<const Method> methods,
    std::span<const double> fractions, int runs, std::uint64_t base_seed,
    int threads);

struct Aggregate {
  Method method = Method::kSimSiam;
  double fraction = 1.0;
  double mean_kappa = 0.0;
  double std_kappa = 0.0;
  int runs = 0;
  int failed = 0;
};

// Mean and sample standard deviation of kappa per (method, fraction), in
// first-appearance order. Failed runs and undefined kappas are counted in
// `failed` and left out.
std::vector<Aggregate> aggregate(std::span<const CellResult> rows);

// Trains a frozen-extractor probe for `setting` on probe_samples_per_user
// windows per user and scores it on that dataset's test sessions.
training::Evaluation run_setting(ProbeSetting setting, const PreparedData& data,
                                 const models::FeatureExtractor& extractor,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed);

// SimSiam pre-training on Dataset 1's unlabelled pool.
training::SimSiamResult pretrain_on_d1(const PreparedData& data,
                                       const ExperimentConfig& cfg,
                                       std::uint64_t seed);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
// Sample standard deviation (n - 1); zero for fewer than two values.
MeanStd mean_std(std::span<const double> values);

}  // namespace siamts::analysis

#endif  // SIAMTS_ANALYSIS_EXPERIMENT_H_
