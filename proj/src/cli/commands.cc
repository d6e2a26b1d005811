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

#include "siamts/cli/commands.h"

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "siamts/analysis/parallel.h"
#include "siamts/analysis/sweep.h"
#include "siamts/cli/files.h"
#include "siamts/cli/gradcheck_suite.h"
#include "siamts/common/error.h"
#include "siamts/data/corpus_io.h"

namespace siamts::cli {
namespace {

namespace fs = std::filesystem;

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json load_config_file(const std::optional<std::string>& path) {
  if (!path) return Json::object();
  const std::string text = read_text_file(*path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(*path + ": " + e.what());
  }
}

}  // namespace

void cmd_synth(const SynthConfig& cfg, std::ostream& log) {
  CorpusSource source;
  source.synth = cfg.synth;
  const std::vector<data::SessionRecording> recs =
      load_recordings(source, cfg.seed);

  std::ostringstream corpus;
  data::write_stsd(corpus, recs);
  const fs::path out(cfg.out_dir);
  write_file_atomic(out / "corpus.stsd", corpus.str());

  std::map<int, std::vector<int>> sessions;
  for (const auto& r : recs) sessions[r.user_id].push_back(r.session_id);
  Json users = Json::array();
  for (const auto& [user, ids] : sessions) {
    users.push_back({{"user_id", user}, {"sessions", ids}});
  }
  const Json manifest = {{"corpus", "corpus.stsd"},
                         {"format", "stsd"},
                         {"n_sessions", recs.size()},
                         {"users", users},
                         {"config", to_json(cfg)}};
  write_file_atomic(out / "manifest.json", manifest.dump(2) + "\n");
  log << "wrote " << recs.size() << " sessions of " << sessions.size()
      << " users to " << (out / "corpus.stsd").string() << "\n";
}

Json make_report(const RunConfig& cfg,
                 std::span<const analysis::CellResult> rows) {
  Json jrows = Json::array();
  for (const auto& r : rows) {
    jrows.push_back({{"method", std::string(analysis::to_string(r.method))},
                     {"fraction", r.fraction},
                     {"run", r.run},
                     {"seed", r.seed},
                     {"kappa", optional_json(r.kappa)},
                     {"accuracy", r.accuracy},
                     {"collapse_stat", optional_json(r.collapse_stat)},
                     {"stopped_epoch", r.stopped_epoch},
                     {"failed", r.failed},
                     {"error", r.error}});
  }
  Json aggregates = Json::array();
  for (const auto& a : analysis::aggregate(rows)) {
    aggregates.push_back({{"method", std::string(analysis::to_string(a.method))},
                          {"fraction", a.fraction},
                          {"mean_kappa", a.mean_kappa},
                          {"std_kappa", a.std_kappa},
                          {"runs", a.runs},
                          {"failed", a.failed}});
  }
  return {{"config", to_json(cfg)}, {"rows", jrows}, {"aggregates", aggregates}};
}

std::string curve_csv(std::span<const analysis::Aggregate> aggregates) {
  std::ostringstream out;
  out.precision(17);
  out << "fraction,method,mean_kappa,std\n";
  for (const auto& a : aggregates) {
    out << a.fraction << ',' << analysis::to_string(a.method) << ','
        << a.mean_kappa << ',' << a.std_kappa << '\n';
  }
  return out.str();
}

void cmd_run(const RunConfig& cfg, int threads, std::ostream& log) {
  cfg.validate();
  const auto recs = load_recordings(cfg.corpus, cfg.seed);
  log << "scenario " << cfg.scenario << ": " << cfg.methods.size()
      << " method(s) x " << cfg.fractions.size() << " fraction(s) x "
      << cfg.runs << " run(s) on " << recs.size() << " sessions\n";
  const std::vector<analysis::CellResult> rows = analysis::run_scenario(
      cfg.experiment, recs, cfg.scenario, cfg.methods, cfg.fractions, cfg.runs,
      cfg.seed, threads);
  const fs::path out(cfg.out_dir);
  write_file_atomic(out / "report.json", make_report(cfg, rows).dump(2) + "\n");
  const auto aggregates = analysis::aggregate(rows);
  write_file_atomic(out / "curve.csv", curve_csv(aggregates));
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.failed;
  log << "wrote " << (out / "report.json").string() << " (" << rows.size()
      << " rows, " << failed << " failed) and "
      << (out / "curve.csv").string() << "\n";
}

void cmd_sweep(const SweepConfig& cfg, int threads, std::ostream& log) {
  const auto recs = load_recordings(cfg.corpus, cfg.sweep.base_seed);
  log << "sweep over " << analysis::to_string(cfg.sweep.variable) << ": "
      << cfg.sweep.candidates.size() << " candidates x "
      << cfg.sweep.runs_per_point << " runs\n";
  const analysis::SweepTable table = analysis::run_sweep(cfg.sweep, recs, threads);
  std::ostringstream csv;
  analysis::write_sweep_csv(csv, table);
  const fs::path out(cfg.out_dir);
  write_file_atomic(out / "sweep.csv", csv.str());
  Json doc = analysis::to_json(table);
  doc["config"] = to_json(cfg);
  write_file_atomic(out / "sweep.json", doc.dump(2) + "\n");
  log << "wrote " << (out / "sweep.csv").string() << "\n";
}

int cmd_gradcheck(std::ostream& out, double perturbation) {
  numerics::GradcheckOptions options;
  options.analytic_perturbation = perturbation;
  const GradcheckReport report = run_gradcheck_suite(options);
  print_gradcheck_report(out, report);
  return report.all_passed() ? kExitOk : kExitNumericError;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Non-contrastive self-supervised learning for multivariate "
               "time series"};
  app.require_subcommand(1);

  std::optional<std::string> config_path, out_dir, profile;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  auto add_common = [&](CLI::App* cmd, bool with_runs) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "base seed");
    cmd->add_option("--profile", profile, "dataset profile")
        ->check(CLI::IsMember({"musicid", "mmi", "synth"}));
    if (with_runs) {
      cmd->add_option("--runs", runs, "runs per cell")
          ->check(CLI::Range(1, 1 << 30));
    }
  };
  CLI::App* synth = app.add_subcommand("synth", "write a synthetic corpus");
  add_common(synth, false);
  CLI::App* run = app.add_subcommand("run", "scenario runs over label fractions");
  add_common(run, true);
  CLI::App* sweep = app.add_subcommand("sweep", "frozen-probe analysis sweep");
  add_common(sweep, true);
  CLI::App* gradcheck =
      app.add_subcommand("gradcheck", "finite-difference gradient checks");
  double perturbation = 0.0;
  gradcheck->add_option("--perturb", perturbation,
                        "relative error injected into analytic gradients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    const Overrides overrides{profile, out_dir, seed, runs};
    const int threads = analysis::thread_budget();
    if (*synth) {
      cmd_synth(synth_config_from_json(load_config_file(config_path), overrides),
                std::cerr);
    } else if (*run) {
      cmd_run(run_config_from_json(load_config_file(config_path), overrides),
              threads, std::cerr);
    } else if (*sweep) {
      if (!config_path) throw ConfigError("sweep requires --config");
      cmd_sweep(sweep_config_from_json(load_config_file(config_path), overrides),
                threads, std::cerr);
    } else if (*gradcheck) {
      return cmd_gradcheck(std::cout, perturbation);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace siamts::cli
