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

#ifndef SIAMTS_NUMERICS_GRADCHECK_H_
#define SIAMTS_NUMERICS_GRADCHECK_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "siamts/numerics/graph.h"

namespace siamts::numerics {

struct GradcheckOptions {
  double step = 1e-5;
  double tolerance = 1e-4;
  // Denominator floor of the relative error, so that gradients that are
  // zero up to round-off compare absolutely.
  double magnitude_floor = 1e-6;
  // Fault injection: added (relatively) to every analytic gradient entry.
  double analytic_perturbation = 0.0;
};

struct GradcheckResult {
  std::string name;
  double max_relative_error = 0.0;
  std::size_t entries_checked = 0;
  bool passed = false;
};

// Builds a scalar-valued graph over leaves that hold copies of the inputs.
using ScalarGraphFn = std::function<Var(Graph&, std::span<const Var>)>;

// Compares reverse-mode gradients with respect to every entry of every
// input against central finite differences of the forward value.
GradcheckResult gradcheck(const std::string& name, const ScalarGraphFn& fn,
                          std::vector<Tensor> inputs,
                          const GradcheckOptions& options = {});

}  // namespace siamts::numerics

#endif  // SIAMTS_NUMERICS_GRADCHECK_H_
