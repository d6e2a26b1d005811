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

#include "siamts/analysis/serialization.h"

#include <set>
#include <string>
#include <type_traits>

#include "siamts/common/error.h"

namespace siamts::analysis {
namespace {

std::string_view to_string(models::OutputActivation a) {
  switch (a) {
    case models::OutputActivation::kSoftmax:
      return "softmax";
    case models::OutputActivation::kSigmoid:
      return "sigmoid";
    case models::OutputActivation::kNone:
      break;
  }
  return "none";
}

models::OutputActivation parse_activation(const std::string& s) {
  if (s == "none") return models::OutputActivation::kNone;
  if (s == "softmax") return models::OutputActivation::kSoftmax;
  if (s == "sigmoid") return models::OutputActivation::kSigmoid;
  throw ConfigError("unknown output activation '" + s + "'");
}

Json augmentations_to_json(const std::vector<augment::AugmentationSpec>& specs) {
  Json out = Json::array();
  for (const auto& s : specs) out.push_back(to_json(s));
  return out;
}

std::vector<augment::AugmentationSpec> augmentations_from_json(
    const Json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected a list");
  std::vector<augment::AugmentationSpec> out;
  for (const Json& item : j) out.push_back(augmentation_from_json(item));
  return out;
}

void diff(const Json& a, const Json& b, const std::string& path,
          std::vector<std::string>& out) {
  if (a.is_object() && b.is_object()) {
    std::set<std::string> keys;
    for (const auto& [k, _] : a.items()) keys.insert(k);
    for (const auto& [k, _] : b.items()) keys.insert(k);
    for (const auto& k : keys) {
      const std::string sub = path.empty() ? k : path + "." + k;
      if (!a.contains(k) || !b.contains(k)) {
        out.push_back(sub);
      } else {
        diff(a.at(k), b.at(k), sub, out);
      }
    }
    return;
  }
  if (a != b) out.push_back(path);
}

}  // namespace

Json to_json(const augment::AugmentationSpec& spec) {
  return {{"kind", std::string(augment::to_string(spec.kind))},
          {"sigma", spec.sigma},
          {"mu", spec.mu},
          {"knots", spec.knots},
          {"fraction", spec.fraction},
          {"segments", spec.segments}};
}

augment::AugmentationSpec augmentation_from_json(const Json& j) {
  if (j.is_string()) {
    return augment::AugmentationSpec::defaults(
        augment::parse_augmentation_kind(j.get<std::string>()));
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("augmentation: expected a name or an object with 'kind'");
  }
  augment::AugmentationSpec spec = augment::AugmentationSpec::defaults(
      augment::parse_augmentation_kind(j.at("kind").get<std::string>()));
  JsonObjectReader r(j, "augmentation");
  std::string kind;
  r.get("kind", kind);
  r.get("sigma", spec.sigma);
  r.get("mu", spec.mu);
  r.get("knots", spec.knots);
  r.get("fraction", spec.fraction);
  r.get("segments", spec.segments);
  r.finish();
  spec.validate();
  return spec;
}

Json to_json(const models::FeatureExtractorSpec& spec) {
  return {{"filters", spec.filters},
          {"kernel_size", spec.kernel_size},
          {"weight_decay", spec.weight_decay}};
}

models::FeatureExtractorSpec extractor_from_json(
    const Json& j, models::FeatureExtractorSpec base) {
  JsonObjectReader r(j, "extractor");
  r.get("filters", base.filters);
  r.get("kernel_size", base.kernel_size);
  r.get("weight_decay", base.weight_decay);
  r.finish();
  base.validate();
  return base;
}

Json to_json(const models::MlpSpec& spec) {
  return {{"widths", spec.widths},
          {"output", std::string(to_string(spec.output))},
          {"hidden_relu", spec.hidden_relu},
          {"standardize_hidden", spec.standardize_hidden}};
}

models::MlpSpec mlp_from_json(const Json& j, models::MlpSpec base) {
  JsonObjectReader r(j, "mlp");
  r.get("widths", base.widths);
  std::string output(to_string(base.output));
  r.get("output", output);
  base.output = parse_activation(output);
  r.get("hidden_relu", base.hidden_relu);
  r.get("standardize_hidden", base.standardize_hidden);
  r.finish();
  base.validate();
  return base;
}

Json to_json(const training::TrainConfig& cfg) {
  return {{"method", cfg.method},
          {"initial_lr", cfg.initial_lr},
          {"decay_rate", cfg.decay_rate},
          {"decay_steps", cfg.decay_steps},
          {"max_epochs", cfg.max_epochs},
          {"batch_size", cfg.batch_size},
          {"patience", cfg.patience},
          {"early_stopping", cfg.early_stopping},
          {"seed", cfg.seed},
          {"finetune_extractor", cfg.finetune_extractor},
          {"stop_gradient", cfg.stop_gradient}};
}

training::TrainConfig train_config_from_json(const Json& j,
                                             training::TrainConfig base) {
  JsonObjectReader r(j, "train");
  r.get("method", base.method);
  r.get("initial_lr", base.initial_lr);
  r.get("decay_rate", base.decay_rate);
  r.get("decay_steps", base.decay_steps);
  r.get("max_epochs", base.max_epochs);
  r.get("batch_size", base.batch_size);
  r.get("patience", base.patience);
  r.get("early_stopping", base.early_stopping);
  r.get("seed", base.seed);
  r.get("finetune_extractor", base.finetune_extractor);
  r.get("stop_gradient", base.stop_gradient);
  r.finish();
  base.validate();
  return base;
}

Json to_json(const data::SynthParams& p) {
  return {{"n_users", p.n_users},
          {"sessions_per_user", p.sessions_per_user},
          {"session_length", p.session_length},
          {"channels", p.channels},
          {"components", p.components},
          {"min_frequency", p.min_frequency},
          {"max_frequency", p.max_frequency},
          {"noise_std", p.noise_std},
          {"offset", p.offset},
          {"session_gain_jitter", p.session_gain_jitter},
          {"frequency_jitter", p.frequency_jitter},
          {"sample_rate", p.sample_rate}};
}

data::SynthParams synth_params_from_json(const Json& j, data::SynthParams p) {
  JsonObjectReader r(j, "synth");
  r.get("n_users", p.n_users);
  r.get("sessions_per_user", p.sessions_per_user);
  r.get("session_length", p.session_length);
  r.get("channels", p.channels);
  r.get("components", p.components);
  r.get("min_frequency", p.min_frequency);
  r.get("max_frequency", p.max_frequency);
  r.get("noise_std", p.noise_std);
  r.get("offset", p.offset);
  r.get("session_gain_jitter", p.session_gain_jitter);
  r.get("frequency_jitter", p.frequency_jitter);
  r.get("sample_rate", p.sample_rate);
  r.finish();
  return p;
}

Json to_json(const ExperimentConfig& cfg) {
  const auto composition =
      cfg.simsiam.composition == augment::PairComposition::kApplyAll
          ? "apply_all"
          : "pick_one";
  return {
      {"steps", cfg.steps},
      {"fraction_d1", cfg.fraction_d1},
      {"roles",
       {{"validation", cfg.roles.validation},
        {"test", cfg.roles.test},
        {"labelled", cfg.roles.labelled}}},
      {"train_overlap", cfg.train_overlap},
      {"extractor", to_json(cfg.extractor)},
      {"simsiam",
       {{"projector", to_json(cfg.simsiam.projector)},
        {"predictor", to_json(cfg.simsiam.predictor)},
        {"augmentations", augmentations_to_json(cfg.simsiam.augmentations)},
        {"composition", composition},
        {"collapse_probe", cfg.simsiam.collapse_probe}}},
      {"mtssl",
       {{"tasks", augmentations_to_json(cfg.mtssl.tasks)},
        {"head", to_json(cfg.mtssl.head)}}},
      {"augmented",
       {{"scaling", to_json(cfg.augmented.scaling)},
        {"jitter", to_json(cfg.augmented.jitter)},
        {"copies", cfg.augmented.copies}}},
      {"pretrain", to_json(cfg.pretrain)},
      {"classifier", to_json(cfg.classifier)},
      {"probe_samples_per_user", cfg.probe_samples_per_user},
  };
}

ExperimentConfig experiment_from_json(const Json& j, ExperimentConfig base) {
  JsonObjectReader r(j, "experiment");
  r.get("steps", base.steps);
  r.get("fraction_d1", base.fraction_d1);
  if (const Json* roles = r.child("roles")) {
    JsonObjectReader rr(*roles, "experiment.roles");
    rr.get("validation", base.roles.validation);
    rr.get("test", base.roles.test);
    rr.get("labelled", base.roles.labelled);
    rr.finish();
  }
  r.get("train_overlap", base.train_overlap);
  if (const Json* e = r.child("extractor")) {
    base.extractor = extractor_from_json(*e, base.extractor);
  }
  if (const Json* s = r.child("simsiam")) {
    JsonObjectReader sr(*s, "experiment.simsiam");
    if (const Json* p = sr.child("projector")) {
      base.simsiam.projector = mlp_from_json(*p, base.simsiam.projector);
    }
    if (const Json* p = sr.child("predictor")) {
      base.simsiam.predictor = mlp_from_json(*p, base.simsiam.predictor);
    }
    if (const Json* a = sr.child("augmentations")) {
      base.simsiam.augmentations =
          augmentations_from_json(*a, sr.path("augmentations"));
    }
    std::string composition =
        base.simsiam.composition == augment::PairComposition::kApplyAll
            ? "apply_all"
            : "pick_one";
    sr.get("composition", composition);
    if (composition == "apply_all") {
      base.simsiam.composition = augment::PairComposition::kApplyAll;
    } else if (composition == "pick_one") {
      base.simsiam.composition = augment::PairComposition::kPickOne;
    } else {
      throw ConfigError(sr.path("composition") + ": expected apply_all or pick_one");
    }
    sr.get("collapse_probe", base.simsiam.collapse_probe);
    sr.finish();
  }
  if (const Json* m = r.child("mtssl")) {
    JsonObjectReader mr(*m, "experiment.mtssl");
    if (const Json* t = mr.child("tasks")) {
      base.mtssl.tasks = augmentations_from_json(*t, mr.path("tasks"));
    }
    if (const Json* h = mr.child("head")) {
      base.mtssl.head = mlp_from_json(*h, base.mtssl.head);
    }
    mr.finish();
  }
  if (const Json* a = r.child("augmented")) {
    JsonObjectReader ar(*a, "experiment.augmented");
    if (const Json* s = ar.child("scaling")) {
      base.augmented.scaling = augmentation_from_json(*s);
    }
    if (const Json* s = ar.child("jitter")) {
      base.augmented.jitter = augmentation_from_json(*s);
    }
    ar.get("copies", base.augmented.copies);
    ar.finish();
  }
  if (const Json* t = r.child("pretrain")) {
    base.pretrain = train_config_from_json(*t, base.pretrain);
  }
  if (const Json* t = r.child("classifier")) {
    base.classifier = train_config_from_json(*t, base.classifier);
  }
  r.get("probe_samples_per_user", base.probe_samples_per_user);
  r.finish();
  base.validate();
  return base;
}

std::vector<std::string> json_diff(const Json& a, const Json& b) {
  std::vector<std::string> out;
  diff(a, b, "", out);
  return out;
}

}  // namespace siamts::analysis
