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

#ifndef SIAMTS_ANALYSIS_SERIALIZATION_H_
#define SIAMTS_ANALYSIS_SERIALIZATION_H_

#include <cstdint>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "siamts/analysis/experiment.h"
#include "siamts/common/error.h"
#include "siamts/augment/transforms.h"
#include "siamts/data/synth.h"
#include "siamts/models/feature_extractor.h"
#include "siamts/models/mlp.h"
#include "siamts/training/config.h"

namespace siamts::analysis {

using Json = nlohmann::json;

namespace detail {

template <typename T>
struct unsigned_payload : std::is_unsigned<T> {};
template <>
struct unsigned_payload<bool> : std::false_type {};
template <typename T>
struct unsigned_payload<std::vector<T>> : unsigned_payload<T> {};

inline bool has_negative_integer(const Json& v) {
  if (v.is_array()) {
    for (const Json& e : v) {
      if (has_negative_integer(e)) return true;
    }
    return false;
  }
  return v.is_number_integer() && v.get<std::int64_t>() < 0;
}

}  // namespace detail

// Reads the keys of one JSON object into fields and rejects the leftovers.
class JsonObjectReader {
 public:
  JsonObjectReader(const Json& j, std::string where)
      : j_(j), where_(std::move(where)) {
    if (!j.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  // Leaves `dst` untouched when the key is absent.
  template <typename T>
  void get(const char* key, T& dst) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    const Json& v = j_.at(key);
    if (detail::unsigned_payload<T>::value && detail::has_negative_integer(v)) {
      throw ConfigError(path(key) + ": must be non-negative");
    }
    try {
      dst = v.get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(path(key) + ": unexpected value " + v.dump());
    }
  }

  // The sub-document under `key`, or null when absent.
  const Json* child(const char* key) {
    seen_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }

  std::string path(const char* key) const { return where_ + "." + key; }

  // Throws ConfigError on the first key nobody asked for.
  void finish() const {
    for (const auto& [key, _] : j_.items()) {
      if (!seen_.count(key)) {
        throw ConfigError(where_ + ": unknown key '" + key + "'");
      }
    }
  }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

// Every *_from_json starts from `base` and overrides the keys present.
// Unknown keys and mistyped values throw ConfigError naming the key.

Json to_json(const augment::AugmentationSpec& spec);
// Accepts a bare kind name (defaults) or an object with "kind".
augment::AugmentationSpec augmentation_from_json(const Json& j);

Json to_json(const models::FeatureExtractorSpec& spec);
models::FeatureExtractorSpec extractor_from_json(
    const Json& j, models::FeatureExtractorSpec base = {});

Json to_json(const models::MlpSpec& spec);
models::MlpSpec mlp_from_json(const Json& j, models::MlpSpec base);

Json to_json(const training::TrainConfig& cfg);
training::TrainConfig train_config_from_json(const Json& j,
                                             training::TrainConfig base);

Json to_json(const data::SynthParams& params);
data::SynthParams synth_params_from_json(const Json& j,
                                         data::SynthParams base = {});

Json to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_from_json(const Json& j, ExperimentConfig base);

// Dotted paths at which two documents differ.
std::vector<std::string> json_diff(const Json& a, const Json& b);

}  // namespace siamts::analysis

#endif  // SIAMTS_ANALYSIS_SERIALIZATION_H_
