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

#ifndef SIAMTS_CLI_COMMANDS_H_
#define SIAMTS_CLI_COMMANDS_H_

#include <filesystem>
#include <ostream>
#include <span>

#include "siamts/analysis/experiment.h"
#include "siamts/cli/run_config.h"

namespace siamts::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfigError = 2,
  kExitDataError = 3,
  kExitNumericError = 4,
};

// Writes <out>/corpus.stsd and <out>/manifest.json.
void cmd_synth(const SynthConfig& cfg, std::ostream& log);

// Runs every (method, fraction, run) cell and writes <out>/report.json and
// <out>/curve.csv.
void cmd_run(const RunConfig& cfg, int threads, std::ostream& log);

Json make_report(const RunConfig& cfg,
                 std::span<const analysis::CellResult> rows);
// Header `fraction,method,mean_kappa,std`.
std::string curve_csv(std::span<const analysis::Aggregate> aggregates);

// Writes <out>/sweep.csv and <out>/sweep.json.
void cmd_sweep(const SweepConfig& cfg, int threads, std::ostream& log);

// Prints the report; returns kExitNumericError when any case fails.
int cmd_gradcheck(std::ostream& out, double perturbation = 0.0);

// Full command-line entry point (subcommands synth, run, sweep, gradcheck).
int run_cli(int argc, char** argv);

}  // namespace siamts::cli

#endif  // SIAMTS_CLI_COMMANDS_H_
