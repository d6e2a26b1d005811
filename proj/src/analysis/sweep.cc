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

#include "siamts/analysis/sweep.h"

#include <string>

#include "siamts/analysis/parallel.h"
#include "siamts/common/error.h"

namespace siamts::analysis {
namespace {

constexpr std::pair<SweepVariable, std::string_view> kVariableNames[] = {
    {SweepVariable::kAugmentationPair, "augmentation_pair"},
    {SweepVariable::kFeConfig, "fe_config"},
    {SweepVariable::kPredictorDepth, "predictor_depth"},
    {SweepVariable::kWeightDecay, "weight_decay"},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
T candidate_as(const Json& value, SweepVariable variable) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("sweep candidate " + value.dump() + " is not a valid " +
                      std::string(to_string(variable)) + " value");
  }
}

struct RunSlot {
  std::vector<std::optional<double>> kappa;  // per setting
  std::vector<std::string> error;
};

}  // namespace

std::string_view to_string(SweepVariable variable) {
  for (const auto& [v, name] : kVariableNames) {
    if (v == variable) return name;
  }
  return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  for (const auto& [v, n] : kVariableNames) {
    if (n == name) return v;
  }
  throw ConfigError("unknown sweep variable '" + std::string(name) +
                    "' (augmentation_pair, fe_config, predictor_depth, "
                    "weight_decay)");
}

ExperimentConfig apply_candidate(const ExperimentConfig& base,
                                 SweepVariable variable, const Json& value) {
  ExperimentConfig cfg = base;
  switch (variable) {
    case SweepVariable::kAugmentationPair: {
      if (!value.is_array() || value.empty()) {
        throw ConfigError("augmentation_pair candidate must be a non-empty list");
      }
      cfg.simsiam.augmentations.clear();
      for (const Json& a : value) {
        cfg.simsiam.augmentations.push_back(augmentation_from_json(a));
      }
      break;
    }
    case SweepVariable::kFeConfig:
      cfg.extractor.filters =
          candidate_as<std::vector<std::size_t>>(value, variable);
      break;
    case SweepVariable::kPredictorDepth:
      cfg.simsiam.predictor.widths =
          candidate_as<std::vector<std::size_t>>(value, variable);
      break;
    case SweepVariable::kWeightDecay:
      cfg.extractor.weight_decay = candidate_as<double>(value, variable);
      break;
  }
  cfg.validate();
  if (cfg.simsiam.predictor.widths.back() != cfg.simsiam.projector.widths.back()) {
    throw ConfigError("sweep candidate " + value.dump() +
                      ": predictor must end at the projector width " +
                      std::to_string(cfg.simsiam.projector.widths.back()));
  }
  return cfg;
}

void SweepSpec::validate() const {
  if (candidates.size() < 2) {
    throw ConfigError("sweep needs at least 2 candidate values, got " +
                      std::to_string(candidates.size()));
  }
  if (runs_per_point < 1) throw ConfigError("sweep: runs_per_point must be >= 1");
  if (settings.empty()) throw ConfigError("sweep: no probe settings");
  for (const Json& c : candidates) apply_candidate(baseline, variable, c);
}

SweepTable run_sweep(const SweepSpec& spec,
                     std::span<const data::SessionRecording> recs, int threads) {
  spec.validate();
  SweepTable table;
  table.variable = spec.variable;
  std::vector<ExperimentConfig> configs;
  for (const Json& c : spec.candidates) {
    configs.push_back(apply_candidate(spec.baseline, spec.variable, c));
    table.configs.push_back(to_json(configs.back()));
  }

  const std::size_t runs = static_cast<std::size_t>(spec.runs_per_point);
  const std::size_t n_settings = spec.settings.size();
  std::vector<RunSlot> slots(configs.size() * runs);
  parallel_for(slots.size(), threads, [&](std::size_t job) {
    const ExperimentConfig& cfg = configs[job / runs];
    const std::uint64_t seed = spec.base_seed + job % runs;
    RunSlot& slot = slots[job];
    slot.kappa.assign(n_settings, std::nullopt);
    slot.error.assign(n_settings, "");
    try {
      const PreparedData data = prepare_data(recs, cfg, seed);
      const training::SimSiamResult pre = pretrain_on_d1(data, cfg, seed);
      for (std::size_t s = 0; s < n_settings; ++s) {
        try {
          const training::Evaluation e = run_setting(
              spec.settings[s], data, pre.network.extractor, cfg, seed);
          slot.kappa[s] = e.kappa;
          if (!e.kappa) slot.error[s] = "kappa undefined on the test set";
        } catch (const std::exception& e) {
          slot.error[s] = e.what();
        }
      }
    } catch (const std::exception& e) {
      for (auto& err : slot.error) err = e.what();
    }
  });

  for (std::size_t c = 0; c < configs.size(); ++c) {
    for (std::size_t s = 0; s < n_settings; ++s) {
      SweepPoint p;
      p.value = spec.candidates[c];
      p.setting = spec.settings[s];
      for (std::size_t r = 0; r < runs; ++r) {
        const RunSlot& slot = slots[c * runs + r];
        if (slot.kappa[s]) {
          p.kappas.push_back(*slot.kappa[s]);
        } else {
          ++p.failed;
          p.errors.push_back("run " + std::to_string(r) + ": " + slot.error[s]);
        }
      }
      const MeanStd ms = mean_std(p.kappas);
      p.mean = ms.mean;
      p.std = ms.std;
      table.points.push_back(std::move(p));
    }
  }
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  std::vector<ProbeSetting> settings;
  for (const SweepPoint& p : table.points) {
    if (!settings.empty() && p.setting == settings.front()) break;
    settings.push_back(p.setting);
  }
  out << to_string(table.variable);
  for (ProbeSetting s : settings) {
    const std::string n(to_string(s));
    out << ',' << n << "_mean," << n << "_std," << n << "_runs," << n
        << "_failed";
  }
  out << '\n';
  const auto old = out.precision(17);
  for (std::size_t i = 0; i < table.points.size(); i += settings.size()) {
    out << csv_field(table.points[i].value.dump());
    for (std::size_t s = 0; s < settings.size(); ++s) {
      const SweepPoint& p = table.points[i + s];
      out << ',' << p.mean << ',' << p.std << ',' << p.kappas.size() << ','
          << p.failed;
    }
    out << '\n';
  }
  out.precision(old);
}

Json to_json(const SweepTable& table) {
  Json points = Json::array();
  for (const SweepPoint& p : table.points) {
    points.push_back({{"value", p.value},
                      {"setting", std::string(to_string(p.setting))},
                      {"kappas", p.kappas},
                      {"failed", p.failed},
                      {"errors", p.errors},
                      {"mean", p.mean},
                      {"std", p.std}});
  }
  return {{"variable", std::string(to_string(table.variable))},
          {"points", points},
          {"configs", table.configs}};
}

}  // namespace siamts::analysis
