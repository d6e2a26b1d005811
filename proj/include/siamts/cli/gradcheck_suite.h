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

#ifndef SIAMTS_CLI_GRADCHECK_SUITE_H_
#define SIAMTS_CLI_GRADCHECK_SUITE_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "siamts/numerics/gradcheck.h"

namespace siamts::cli {

struct GradcheckReport {
  std::vector<numerics::GradcheckResult> results;
  double seconds = 0.0;

  bool all_passed() const;
};

// Finite-difference check of every op, layer type and both loss paths.
GradcheckReport run_gradcheck_suite(const numerics::GradcheckOptions& options = {},
                                    std::uint64_t seed = 0);

// One line per case with its max relative error, then a summary line.
void print_gradcheck_report(std::ostream& out, const GradcheckReport& report);

}  // namespace siamts::cli

#endif  // SIAMTS_CLI_GRADCHECK_SUITE_H_
