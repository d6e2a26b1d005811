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

#include "siamts/analysis/experiment.h"

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "siamts/analysis/parallel.h"
#include "siamts/common/error.h"

namespace siamts::analysis {
namespace {

inline constexpr std::uint64_t kSplitStream = 11;

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::kSimSiam, "simsiam"},     {Method::kMtssl, "mtssl"},
    {Method::kSupervised, "supervised"}, {Method::kAugmented, "augmented"},
    {Method::kTransfer, "transfer"},
};

std::optional<double> final_collapse(const training::TrainTrace& trace) {
  if (trace.collapse_stat.empty()) return std::nullopt;
  return trace.collapse_stat.back();
}

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (simsiam, mtssl, supervised, augmented, transfer)");
}

void check_method_for_scenario(Method method, int scenario) {
  if (scenario < 1 || scenario > 3) {
    throw ConfigError("scenario must be 1, 2 or 3, got " +
                      std::to_string(scenario));
  }
  if (method == Method::kTransfer && scenario != 1) {
    throw ConfigError(
        "method 'transfer' is only available in scenario 1, where labelled "
        "Dataset 1 users serve as the transfer source; got scenario " +
        std::to_string(scenario));
  }
}

std::string_view to_string(ProbeSetting setting) {
  return setting == ProbeSetting::kEx1 ? "Ex1" : "Ex2";
}

ProbeSetting parse_probe_setting(std::string_view name) {
  if (name == "Ex1" || name == "ex1") return ProbeSetting::kEx1;
  if (name == "Ex2" || name == "ex2") return ProbeSetting::kEx2;
  throw ConfigError("unknown probe setting '" + std::string(name) +
                    "' (Ex1, Ex2)");
}

void ExperimentConfig::validate() const {
  if (steps == 0) throw ConfigError("experiment: steps must be >= 1");
  if (!(fraction_d1 > 0.0 && fraction_d1 < 1.0)) {
    throw ConfigError("experiment: fraction_d1 must lie in (0, 1)");
  }
  if (!(train_overlap >= 0.0 && train_overlap < 1.0)) {
    throw ConfigError("experiment: train_overlap must lie in [0, 1)");
  }
  if (probe_samples_per_user == 0) {
    throw ConfigError("experiment: probe_samples_per_user must be >= 1");
  }
  extractor.validate();
  pretrain.validate();
  classifier.validate();
  simsiam.projector.validate();
  simsiam.predictor.validate();
  for (const auto& a : simsiam.augmentations) a.validate();
  for (const auto& a : mtssl.tasks) a.validate();
  augmented.scaling.validate();
  augmented.jitter.validate();
}

ExperimentConfig default_experiment(const data::DatasetProfile& profile) {
  ExperimentConfig cfg;
  cfg.steps = profile.steps;
  cfg.extractor.filters = profile.filters;
  cfg.simsiam.augmentations = profile.pair_recipe;
  cfg.mtssl.tasks = profile.mtssl_recipe;
  cfg.pretrain.max_epochs = profile.pretrain_epochs;
  cfg.probe_samples_per_user = profile.probe_samples_per_user;
  return cfg;
}

training::SimSiamSetup simsiam_setup(const ExperimentConfig& cfg) {
  training::SimSiamSetup s = cfg.simsiam;
  s.extractor = cfg.extractor;
  return s;
}

training::MtsslSetup mtssl_setup(const ExperimentConfig& cfg) {
  training::MtsslSetup s = cfg.mtssl;
  s.extractor = cfg.extractor;
  return s;
}

PreparedData prepare_data(std::span<const data::SessionRecording> recs,
                          const ExperimentConfig& cfg, std::uint64_t seed) {
  Rng rng = make_rng(seed, kSplitStream);
  const data::DatasetSplit split = data::split_dataset(recs, cfg.fraction_d1, rng);
  return {data::partition_sessions(split.d1, cfg.roles, cfg.steps,
                                   cfg.train_overlap),
          data::partition_sessions(split.d2, cfg.roles, cfg.steps,
                                   cfg.train_overlap)};
}

std::vector<CellResult> run_method(const ExperimentConfig& cfg,
                                   const PreparedData& data, int scenario,
                                   Method method,
                                   std::span<const double> fractions, int run,
                                   std::uint64_t seed) {
  std::vector<CellResult> rows;
  for (double f : fractions) {
    CellResult r;
    r.method = method;
    r.fraction = f;
    r.run = run;
    r.seed = seed;
    rows.push_back(r);
  }
  auto fail_all = [&](const std::string& why) {
    for (auto& r : rows) {
      r.failed = true;
      r.error = why;
    }
    return rows;
  };

  training::TrainConfig pretrain = cfg.pretrain;
  pretrain.seed = seed;
  training::TrainConfig classifier = cfg.classifier;
  classifier.seed = seed;

  // Pre-text training sees only the unlabelled pool, which does not depend
  // on the label fraction.
  std::optional<models::FeatureExtractor> pretrained;
  std::optional<double> collapse;
  try {
    check_method_for_scenario(method, scenario);
    if (method == Method::kSimSiam || method == Method::kMtssl) {
      const data::ScenarioSplit s =
          data::make_scenario(scenario, data.d1, data.d2, 1.0, seed);
      if (method == Method::kSimSiam) {
        auto result = training::pretrain_simsiam(s.unlabelled,
                                                 simsiam_setup(cfg), pretrain);
        collapse = final_collapse(result.trace);
        pretrained = std::move(result.network.extractor);
      } else {
        auto result =
            training::pretrain_mtssl(s.unlabelled, mtssl_setup(cfg), pretrain);
        pretrained = std::move(result.network.extractor);
      }
    }
  } catch (const std::exception& e) {
    return fail_all(std::string("pre-training: ") + e.what());
  }

  for (CellResult& r : rows) {
    try {
      const data::ScenarioSplit s =
          data::make_scenario(scenario, data.d1, data.d2, r.fraction, seed);
      training::ClassifierResult model = [&] {
        switch (method) {
          case Method::kSimSiam:
          case Method::kMtssl:
            return training::train_classifier(*pretrained, s.labelled,
                                              s.validation, classifier);
          case Method::kSupervised:
            return training::train_supervised(s.labelled, s.validation,
                                              cfg.extractor, classifier);
          case Method::kAugmented:
            return training::train_augmented(s.labelled, s.validation,
                                             cfg.extractor, classifier,
                                             cfg.augmented);
          case Method::kTransfer:
            break;
        }
        return training::transfer_learn(s.source_labelled, s.source_validation,
                                        s.labelled, s.validation,
                                        cfg.extractor, classifier);
      }();
      const training::Evaluation e = training::evaluate(model, s.test);
      r.kappa = e.kappa;
      r.accuracy = e.accuracy;
      r.collapse_stat = collapse;
      r.stopped_epoch = model.trace.stopped_epoch;
      if (!e.kappa) {
        r.failed = true;
        r.error = "kappa undefined on the test set";
      }
    } catch (const std::exception& e) {
      r.failed = true;
      r.error = e.what();
    }
  }
  return rows;
}

std::vector<CellResult> run_scenario(
    const ExperimentConfig& cfg, std::span<const data::SessionRecording> recs,
    int scenario, std::span<const Method> methods,
    std::span<const double> fractions, int runs, std::uint64_t base_seed,
    int threads) {
  cfg.validate();
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (fractions.empty()) throw ConfigError("no label fractions given");
  for (double f : fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ConfigError("label fraction " + std::to_string(f) +
                        " outside (0, 1]");
    }
  }
  for (Method m : methods) check_method_for_scenario(m, scenario);

  const std::size_t n_runs = static_cast<std::size_t>(runs);
  std::vector<std::vector<CellResult>> slots(methods.size() * n_runs);
  parallel_for(slots.size(), threads, [&](std::size_t job) {
    const Method method = methods[job / n_runs];
    const int run = static_cast<int>(job % n_runs);
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(run);
    try {
      const PreparedData data = prepare_data(recs, cfg, seed);
      slots[job] = run_method(cfg, data, scenario, method, fractions, run, seed);
    } catch (const std::exception& e) {
      for (double f : fractions) {
        CellResult r;
        r.method = method;
        r.fraction = f;
        r.run = run;
        r.seed = seed;
        r.failed = true;
        r.error = std::string("data preparation: ") + e.what();
        slots[job].push_back(r);
      }
    }
  });

  std::vector<CellResult> rows;
  for (auto& s : slots) {
    for (auto& r : s) rows.push_back(std::move(r));
  }
  return rows;
}

MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return out;
}

std::vector<Aggregate> aggregate(std::span<const CellResult> rows) {
  std::vector<std::pair<Method, double>> order;
  std::map<std::pair<Method, double>, std::vector<double>> kappas;
  std::map<std::pair<Method, double>, int> failed;
  for (const CellResult& r : rows) {
    const auto key = std::make_pair(r.method, r.fraction);
    if (!kappas.count(key)) {
      order.push_back(key);
      kappas[key];
      failed[key] = 0;
    }
    if (r.failed || !r.kappa) {
      ++failed[key];
    } else {
      kappas[key].push_back(*r.kappa);
    }
  }
  std::vector<Aggregate> out;
  for (const auto& key : order) {
    const MeanStd ms = mean_std(kappas[key]);
    out.push_back({key.first, key.second, ms.mean, ms.std,
                   static_cast<int>(kappas[key].size()), failed[key]});
  }
  return out;
}

training::Evaluation run_setting(ProbeSetting setting, const PreparedData& data,
                                 const models::FeatureExtractor& extractor,
                                 const ExperimentConfig& cfg,
                                 std::uint64_t seed) {
  const data::SplitPools& pools =
      setting == ProbeSetting::kEx1 ? data.d1 : data.d2;
  const std::vector<Window> train =
      data::take_per_user(pools.labelled, cfg.probe_samples_per_user, seed);
  training::TrainConfig probe = cfg.classifier;
  probe.seed = seed;
  probe.finetune_extractor = false;
  const training::ClassifierResult model =
      training::train_classifier(extractor, train, pools.validation, probe);
  return training::evaluate(model, pools.test);
}

training::SimSiamResult pretrain_on_d1(const PreparedData& data,
                                       const ExperimentConfig& cfg,
                                       std::uint64_t seed) {
  training::TrainConfig pretrain = cfg.pretrain;
  pretrain.seed = seed;
  return training::pretrain_simsiam(strip_labels(data.d1.unlabelled),
                                    simsiam_setup(cfg), pretrain);
}

}  // namespace siamts::analysis
