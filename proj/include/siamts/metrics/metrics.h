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

#ifndef SIAMTS_METRICS_METRICS_H_
#define SIAMTS_METRICS_METRICS_H_

#include <optional>
#include <vector>

#include "siamts/numerics/tensor.h"

namespace siamts::metrics {

struct PredictionSet {
  std::vector<int> truth;
  std::vector<int> predicted;
  int n_classes = 0;

  // Throws DataError on unequal lengths or labels outside [0, n_classes).
  void validate() const;
};

// Fraction of matching labels. Throws DataError on an empty set.
double accuracy(const PredictionSet& ps);

struct KappaTerms {
  double observed_agreement = 0.0;  // P_o
  double chance_agreement = 0.0;    // P_e
};
KappaTerms kappa_terms(const PredictionSet& ps);

// Cohen's kappa (P_o - P_e) / (1 - P_e). Empty when P_e == 1, which happens
// when truth and prediction both use a single class.
std::optional<double> kappa(const PredictionSet& ps);

// Embedding spread of a [B x D] batch: rows are L2-normalized, then the mean
// per-dimension (population) standard deviation is scaled by sqrt(D).
// About 1 for isotropic embeddings, 0 when every row points the same way.
// Throws NumericError for B < 2 or a zero row.
double collapse_stat(const numerics::Tensor& embeddings);

}  // namespace siamts::metrics

#endif  // SIAMTS_METRICS_METRICS_H_
