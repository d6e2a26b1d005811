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

#include "siamts/numerics/gradcheck.h"

#include <algorithm>
#include <cmath>

#include "siamts/common/error.h"

namespace siamts::numerics {
namespace {

double evaluate(const ScalarGraphFn& fn, const std::vector<Tensor>& inputs) {
  Graph g;
  std::vector<Var> leaves;
  leaves.reserve(inputs.size());
  for (const Tensor& t : inputs) leaves.push_back(g.input(t, false));
  return fn(g, leaves).value().item();
}

}  // namespace

GradcheckResult gradcheck(const std::string& name, const ScalarGraphFn& fn,
                          std::vector<Tensor> inputs,
                          const GradcheckOptions& options) {
  std::vector<Tensor> analytic;
  {
    Graph g;
    std::vector<Var> leaves;
    for (const Tensor& t : inputs) leaves.push_back(g.input(t, true));
    Var root = fn(g, leaves);
    g.backward(root);
    for (const Var& leaf : leaves) {
      const Tensor* grad = g.grad(leaf);
      analytic.push_back(grad ? *grad : Tensor(leaf.shape(), 0.0));
    }
  }

  GradcheckResult result;
  result.name = name;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t j = 0; j < inputs[i].size(); ++j) {
      const double original = inputs[i][j];
      inputs[i][j] = original + options.step;
      const double up = evaluate(fn, inputs);
      inputs[i][j] = original - options.step;
      const double down = evaluate(fn, inputs);
      inputs[i][j] = original;

      const double numeric = (up - down) / (2.0 * options.step);
      double a = analytic[i][j];
      a += options.analytic_perturbation * (std::abs(a) + 1.0);
      const double denom = std::max(
          {std::abs(a), std::abs(numeric), options.magnitude_floor});
      result.max_relative_error =
          std::max(result.max_relative_error, std::abs(a - numeric) / denom);
      ++result.entries_checked;
    }
  }
  result.passed = result.max_relative_error < options.tolerance;
  return result;
}

}  // namespace siamts::numerics
