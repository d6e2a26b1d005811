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

#include "siamts/cli/run_config.h"

#include <algorithm>
#include <string>

#include "siamts/common/error.h"
#include "siamts/common/random.h"
#include "siamts/data/corpus_io.h"

namespace siamts::cli {
namespace {

inline constexpr std::uint64_t kCorpusStream = 0xc0;

std::string pick_profile(const Json& j, const Overrides& o) {
  if (o.profile) return *o.profile;
  if (j.contains("profile")) {
    if (!j.at("profile").is_string()) {
      throw ConfigError("profile must be a string");
    }
    return j.at("profile").get<std::string>();
  }
  return "synth";
}

CorpusSource corpus_from_json(const Json* j, const data::DatasetProfile& profile) {
  CorpusSource c;
  c.synth = default_synth_params(profile);
  if (!j) return c;
  analysis::JsonObjectReader r(*j, "corpus");
  r.get("path", c.path);
  r.get("format", c.format);
  if (const Json* s = r.child("synth")) {
    c.synth = analysis::synth_params_from_json(*s, c.synth);
  }
  r.finish();
  data::parse_corpus_format(c.format);
  return c;
}

Json to_json(const CorpusSource& c) {
  return {{"path", c.path},
          {"format", c.format},
          {"synth", analysis::to_json(c.synth)}};
}

}  // namespace

data::SynthParams default_synth_params(const data::DatasetProfile& profile) {
  data::SynthParams p;
  p.channels = profile.channels;
  p.session_length = 5 * profile.steps;
  return p;
}

void RunConfig::validate() const {
  data::profile_by_name(profile);
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (methods.empty()) throw ConfigError("no methods given");
  if (fractions.empty()) throw ConfigError("no label fractions given");
  for (double f : fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw ConfigError("label fraction " + std::to_string(f) +
                        " outside (0, 1]");
    }
  }
  for (analysis::Method m : methods) {
    analysis::check_method_for_scenario(m, scenario);
  }
  experiment.validate();
}

RunConfig run_config_from_json(const Json& j, const Overrides& overrides) {
  RunConfig cfg;
  cfg.profile = pick_profile(j, overrides);
  const data::DatasetProfile profile = data::profile_by_name(cfg.profile);
  cfg.experiment = analysis::default_experiment(profile);

  analysis::JsonObjectReader r(j, "config");
  std::string ignored;
  r.get("profile", ignored);
  cfg.corpus = corpus_from_json(r.child("corpus"), profile);
  r.get("scenario", cfg.scenario);
  if (const Json* m = r.child("method")) {
    if (!m->is_string()) throw ConfigError("config.method must be a string");
    cfg.methods = {analysis::parse_method(m->get<std::string>())};
  }
  if (const Json* ms = r.child("methods")) {
    if (!ms->is_array()) throw ConfigError("config.methods must be a list");
    cfg.methods.clear();
    for (const Json& m : *ms) {
      if (!m.is_string()) throw ConfigError("config.methods entries must be strings");
      cfg.methods.push_back(analysis::parse_method(m.get<std::string>()));
    }
  }
  r.get("fractions", cfg.fractions);
  if (const Json* e = r.child("experiment")) {
    cfg.experiment = analysis::experiment_from_json(*e, cfg.experiment);
  }
  r.get("out", cfg.out_dir);
  r.get("seed", cfg.seed);
  r.get("runs", cfg.runs);
  r.finish();

  if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.runs) cfg.runs = *overrides.runs;
  cfg.validate();
  return cfg;
}

Json to_json(const RunConfig& cfg) {
  Json methods = Json::array();
  for (analysis::Method m : cfg.methods) {
    methods.push_back(std::string(analysis::to_string(m)));
  }
  return {{"profile", cfg.profile},
          {"corpus", to_json(cfg.corpus)},
          {"scenario", cfg.scenario},
          {"methods", methods},
          {"fractions", cfg.fractions},
          {"experiment", analysis::to_json(cfg.experiment)},
          {"out", cfg.out_dir},
          {"seed", cfg.seed},
          {"runs", cfg.runs}};
}

SweepConfig sweep_config_from_json(const Json& j, const Overrides& overrides) {
  SweepConfig cfg;
  cfg.profile = pick_profile(j, overrides);
  const data::DatasetProfile profile = data::profile_by_name(cfg.profile);
  cfg.sweep.baseline = analysis::default_experiment(profile);

  analysis::JsonObjectReader r(j, "sweep");
  std::string ignored;
  r.get("profile", ignored);
  cfg.corpus = corpus_from_json(r.child("corpus"), profile);
  std::string variable;
  r.get("variable", variable);
  if (variable.empty()) throw ConfigError("sweep.variable is required");
  cfg.sweep.variable = analysis::parse_sweep_variable(variable);
  if (const Json* c = r.child("candidates")) {
    if (!c->is_array()) throw ConfigError("sweep.candidates must be a list");
    cfg.sweep.candidates.assign(c->begin(), c->end());
  }
  if (const Json* s = r.child("settings")) {
    if (!s->is_array()) throw ConfigError("sweep.settings must be a list");
    cfg.sweep.settings.clear();
    for (const Json& name : *s) {
      if (!name.is_string()) throw ConfigError("sweep.settings entries must be strings");
      cfg.sweep.settings.push_back(
          analysis::parse_probe_setting(name.get<std::string>()));
    }
  }
  r.get("runs_per_point", cfg.sweep.runs_per_point);
  r.get("seed", cfg.sweep.base_seed);
  if (const Json* e = r.child("experiment")) {
    cfg.sweep.baseline = analysis::experiment_from_json(*e, cfg.sweep.baseline);
  }
  r.get("out", cfg.out_dir);
  r.finish();

  if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
  if (overrides.seed) cfg.sweep.base_seed = *overrides.seed;
  if (overrides.runs) cfg.sweep.runs_per_point = *overrides.runs;
  cfg.sweep.validate();
  return cfg;
}

Json to_json(const SweepConfig& cfg) {
  Json settings = Json::array();
  for (analysis::ProbeSetting s : cfg.sweep.settings) {
    settings.push_back(std::string(analysis::to_string(s)));
  }
  return {{"profile", cfg.profile},
          {"corpus", to_json(cfg.corpus)},
          {"variable", std::string(analysis::to_string(cfg.sweep.variable))},
          {"candidates", cfg.sweep.candidates},
          {"settings", settings},
          {"runs_per_point", cfg.sweep.runs_per_point},
          {"seed", cfg.sweep.base_seed},
          {"experiment", analysis::to_json(cfg.sweep.baseline)},
          {"out", cfg.out_dir}};
}

SynthConfig synth_config_from_json(const Json& j, const Overrides& overrides) {
  SynthConfig cfg;
  cfg.profile = pick_profile(j, overrides);
  cfg.synth = default_synth_params(data::profile_by_name(cfg.profile));
  analysis::JsonObjectReader r(j, "synth_config");
  std::string ignored;
  r.get("profile", ignored);
  if (const Json* s = r.child("synth")) {
    cfg.synth = analysis::synth_params_from_json(*s, cfg.synth);
  }
  r.get("out", cfg.out_dir);
  r.get("seed", cfg.seed);
  r.finish();
  if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
  if (overrides.seed) cfg.seed = *overrides.seed;
  return cfg;
}

Json to_json(const SynthConfig& cfg) {
  return {{"profile", cfg.profile},
          {"synth", analysis::to_json(cfg.synth)},
          {"out", cfg.out_dir},
          {"seed", cfg.seed}};
}

std::vector<data::SessionRecording> load_recordings(const CorpusSource& source,
                                                    std::uint64_t seed) {
  if (!source.path.empty()) {
    return data::load_corpus(source.path,
                             data::parse_corpus_format(source.format));
  }
  Rng rng = make_rng(seed, kCorpusStream);
  return data::synth_generate(source.synth, rng);
}

}  // namespace siamts::cli
