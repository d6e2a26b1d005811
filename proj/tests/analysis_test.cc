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


#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "siamts/analysis/experiment.h"
#include "siamts/analysis/parallel.h"
#include "siamts/analysis/serialization.h"
#include "siamts/analysis/sweep.h"
#include "siamts/common/error.h"
#include "siamts/common/random.h"
#include "siamts/data/synth.h"

namespace siamts::analysis {
namespace {

ExperimentConfig tiny_config() {
  ExperimentConfig cfg = default_experiment(data::synth_profile());
  cfg.steps = 20;
  cfg.extractor.filters = {8, 8};
  cfg.simsiam.projector.widths = {16, 16};
  cfg.simsiam.predictor.widths = {8, 16};
  cfg.simsiam.collapse_probe = 16;
  cfg.pretrain.max_epochs = 2;
  cfg.pretrain.initial_lr = 1e-3;
  cfg.classifier.max_epochs = 3;
  cfg.probe_samples_per_user = 4;
  return cfg;
}

std::vector<data::SessionRecording> tiny_corpus(std::size_t sessions = 6) {
  data::SynthParams p;
  p.n_users = 6;
  p.sessions_per_user = sessions;
  p.session_length = 60;
  p.channels = 3;
  Rng rng = make_rng(1, 0xc0);
  return data::synth_generate(p, rng);
}

TEST(MeanStdTest, SampleStatistics) {
  const std::vector<double> v{1, 2, 3, 4};
  const MeanStd ms = mean_std(v);
  EXPECT_DOUBLE_EQ(ms.mean, 2.5);
  EXPECT_DOUBLE_EQ(ms.std, std::sqrt(5.0 / 3.0));
  EXPECT_EQ(mean_std(std::vector<double>{7}).std, 0.0);
  EXPECT_EQ(mean_std(std::vector<double>{}).mean, 0.0);
}

TEST(AggregateTest, FailedRunsCountedNotImputed) {
  std::vector<CellResult> rows(4);
  rows[0].kappa = 0.5;
  rows[1].kappa = 0.7;
  rows[2].failed = true;
  rows[3].kappa = 0.9;
  rows[3].fraction = 0.5;
  const auto agg = aggregate(rows);
  ASSERT_EQ(agg.size(), 2u);
  EXPECT_DOUBLE_EQ(agg[0].mean_kappa, 0.6);
  EXPECT_EQ(agg[0].runs, 2);
  EXPECT_EQ(agg[0].failed, 1);
  EXPECT_EQ(agg[1].fraction, 0.5);
}

TEST(JsonDiffTest, ReportsChangedPaths) {
  const Json a = {{"x", 1}, {"y", {{"z", 2}, {"w", 3}}}};
  Json b = a;
  EXPECT_TRUE(json_diff(a, b).empty());
  b["y"]["z"] = 5;
  b["v"] = true;
  EXPECT_EQ(json_diff(a, b), (std::vector<std::string>{"v", "y.z"}));
}

TEST(ConfigJsonTest, RoundTripAndUnknownKeys) {
  const ExperimentConfig cfg = tiny_config();
  const Json j = to_json(cfg);
  EXPECT_EQ(to_json(experiment_from_json(j, ExperimentConfig{})), j);
  EXPECT_THROW(experiment_from_json(Json{{"bogus", 1}}, cfg), ConfigError);
  EXPECT_THROW(experiment_from_json(Json{{"steps", -3}}, cfg), ConfigError);
}

TEST(SweepCandidateTest, OnlyTheSweptFieldChanges) {
  const ExperimentConfig base = tiny_config();
  const Json before = to_json(base);
  struct Case {
    SweepVariable variable;
    Json value;
    std::string prefix;
  };
  const std::vector<Case> cases{
      {SweepVariable::kWeightDecay, 0.0001, "extractor.weight_decay"},
      {SweepVariable::kFeConfig, Json::array({16, 32, 64}), "extractor.filters"},
      {SweepVariable::kPredictorDepth, Json::array({32, 32, 16}),
       "simsiam.predictor.widths"},
      {SweepVariable::kAugmentationPair,
       Json::array({Json{{"kind", "flip"}}, Json{{"kind", "negation"}}}),
       "simsiam.augmentations"},
  };
  for (const Case& c : cases) {
    const auto changed = json_diff(before, to_json(apply_candidate(base, c.variable, c.value)));
    ASSERT_FALSE(changed.empty()) << c.prefix;
    for (const std::string& path : changed) {
      EXPECT_EQ(path.rfind(c.prefix, 0), 0u) << path;
    }
  }
}

TEST(SweepCandidateTest, InvalidCandidates) {
  const ExperimentConfig base = tiny_config();
  EXPECT_THROW(apply_candidate(base, SweepVariable::kPredictorDepth,
                               Json::array({8, 8})),
               ConfigError);
  EXPECT_THROW(apply_candidate(base, SweepVariable::kWeightDecay, "big"),
               ConfigError);
  EXPECT_THROW(parse_sweep_variable("depth"), ConfigError);
  SweepSpec spec;
  spec.baseline = base;
  spec.candidates = {0.01};
  EXPECT_THROW(spec.validate(), ConfigError);
  spec.candidates = {0.01, 0.001};
  spec.runs_per_point = 0;
  EXPECT_THROW(spec.validate(), ConfigError);
}

TEST(SweepTest, TableShapeAndMeans) {
  SweepSpec spec;
  spec.variable = SweepVariable::kWeightDecay;
  spec.candidates = {0.1, 0.001};
  spec.runs_per_point = 2;
  spec.base_seed = 3;
  spec.baseline = tiny_config();
  const auto corpus = tiny_corpus();
  const SweepTable t = run_sweep(spec, corpus, 2);
  ASSERT_EQ(t.points.size(), 4u);
  ASSERT_EQ(t.configs.size(), 2u);
  EXPECT_EQ(json_diff(t.configs[0], t.configs[1]),
            (std::vector<std::string>{"extractor.weight_decay"}));
  for (const SweepPoint& p : t.points) {
    EXPECT_EQ(static_cast<int>(p.kappas.size()) + p.failed, 2);
    if (p.kappas.empty()) continue;
    double sum = 0.0;
    for (double k : p.kappas) sum += k;
    EXPECT_NEAR(p.mean, sum / static_cast<double>(p.kappas.size()), 1e-12);
  }
  EXPECT_EQ(t.points[0].setting, ProbeSetting::kEx1);
  EXPECT_EQ(t.points[1].setting, ProbeSetting::kEx2);

  std::ostringstream csv;
  write_sweep_csv(csv, t);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "weight_decay,Ex1_mean,Ex1_std,Ex1_runs,Ex1_failed,Ex2_mean,Ex2_std,"
            "Ex2_runs,Ex2_failed");
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, 2);

  // Threads only change the schedule.
  const SweepTable serial = run_sweep(spec, corpus, 1);
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    EXPECT_EQ(serial.points[i].kappas, t.points[i].kappas);
  }
}

TEST(SweepTest, FailingRunsRecordedAndSweepContinues) {
  SweepSpec spec;
  spec.candidates = {0.1, 0.001};
  spec.runs_per_point = 2;
  spec.baseline = tiny_config();
  // Four sessions per user cannot fill the five session roles.
  const SweepTable t = run_sweep(spec, tiny_corpus(4), 1);
  ASSERT_EQ(t.points.size(), 4u);
  for (const SweepPoint& p : t.points) {
    EXPECT_EQ(p.failed, 2);
    ASSERT_EQ(p.errors.size(), 2u);
    EXPECT_NE(p.errors[0].find("fewer than 5 sessions"), std::string::npos);
  }
}

TEST(ProbeSettingTest, RoutesDataAndFreezesExtractor) {
  const ExperimentConfig cfg = tiny_config();
  const auto corpus = tiny_corpus();
  const PreparedData data = prepare_data(corpus, cfg, 4);
  const auto pre = pretrain_on_d1(data, cfg, 4);
  const auto before = pre.network.extractor.state();
  const auto ex1 = run_setting(ProbeSetting::kEx1, data, pre.network.extractor, cfg, 4);
  const auto ex2 = run_setting(ProbeSetting::kEx2, data, pre.network.extractor, cfg, 4);
  EXPECT_EQ(pre.network.extractor.state(), before);
  const auto& truth = ex1.predictions.truth;
  const std::set<int> ex1_users(truth.begin(), truth.end());
  EXPECT_EQ(ex1_users.size(), data.d1.users.size());
  EXPECT_EQ(ex2.predictions.truth.size(), data.d2.test.size());
  // Same seed, same pre-training.
  EXPECT_EQ(pretrain_on_d1(data, cfg, 4).trace, pre.trace);
}

TEST(ScenarioRunTest, DeterministicRowsAndTransferGate) {
  const ExperimentConfig cfg = tiny_config();
  const auto corpus = tiny_corpus();
  const std::vector<Method> methods{Method::kSupervised, Method::kSimSiam};
  const std::vector<double> fractions{0.5, 1.0};
  const auto a = run_scenario(cfg, corpus, 2, methods, fractions, 2, 9, 2);
  const auto b = run_scenario(cfg, corpus, 2, methods, fractions, 2, 9, 1);
  ASSERT_EQ(a.size(), 8u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].kappa, b[i].kappa);
    EXPECT_EQ(a[i].seed, 9u + static_cast<std::uint64_t>(a[i].run));
  }
  const std::vector<Method> transfer{Method::kTransfer};
  EXPECT_THROW(run_scenario(cfg, corpus, 2, transfer, fractions, 1, 0, 1),
               ConfigError);
  EXPECT_NO_THROW(check_method_for_scenario(Method::kTransfer, 1));
  EXPECT_THROW(run_scenario(cfg, corpus, 4, methods, fractions, 1, 0, 1),
               ConfigError);
}

TEST(ParallelTest, EveryIndexOnce) {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelTest, ThreadBudgetFromEnvironment) {
  ::setenv("SIAMTS_THREADS", "3", 1);
  EXPECT_EQ(thread_budget(), 3);
  ::setenv("SIAMTS_THREADS", "zero", 1);
  EXPECT_GE(thread_budget(), 1);
  ::unsetenv("SIAMTS_THREADS");
}

}  // namespace
}  // namespace siamts::analysis
