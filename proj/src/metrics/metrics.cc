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

#include "siamts/metrics/metrics.h"

#include <cmath>
#include <cstdint>
#include <string>

#include "siamts/common/error.h"

namespace siamts::metrics {
namespace {

struct Counts {
  std::int64_t total = 0;
  std::int64_t correct = 0;
  // Sum over classes of n_true * n_pred.
  std::int64_t chance_pairs = 0;
};

Counts count(const PredictionSet& ps) {
  ps.validate();
  if (ps.truth.empty()) throw DataError("metrics: empty prediction set");
  std::vector<std::int64_t> n_true(static_cast<std::size_t>(ps.n_classes), 0);
  std::vector<std::int64_t> n_pred(n_true.size(), 0);
  Counts c;
  c.total = static_cast<std::int64_t>(ps.truth.size());
  for (std::size_t i = 0; i < ps.truth.size(); ++i) {
    ++n_true[static_cast<std::size_t>(ps.truth[i])];
    ++n_pred[static_cast<std::size_t>(ps.predicted[i])];
    if (ps.truth[i] == ps.predicted[i]) ++c.correct;
  }
  for (std::size_t k = 0; k < n_true.size(); ++k) {
    c.chance_pairs += n_true[k] * n_pred[k];
  }
  return c;
}

}  // namespace

void PredictionSet::validate() const {
  if (truth.size() != predicted.size()) {
    throw DataError("metrics: " + std::to_string(truth.size()) +
                    " true labels but " + std::to_string(predicted.size()) +
                    " predictions");
  }
  auto check = [&](int label) {
    if (label < 0 || label >= n_classes) {
      throw DataError("metrics: label " + std::to_string(label) +
                      " outside [0, " + std::to_string(n_classes) + ")");
    }
  };
  for (int l : truth) check(l);
  for (int l : predicted) check(l);
}

double accuracy(const PredictionSet& ps) {
  const Counts c = count(ps);
  return static_cast<double>(c.correct) / static_cast<double>(c.total);
}

KappaTerms kappa_terms(const PredictionSet& ps) {
  const Counts c = count(ps);
  const double n = static_cast<double>(c.total);
  return {static_cast<double>(c.correct) / n,
          static_cast<double>(c.chance_pairs) / (n * n)};
}

std::optional<double> kappa(const PredictionSet& ps) {
  const Counts c = count(ps);
  // (P_o - P_e) / (1 - P_e) with both terms over n^2, so the only rounding
  // is the final division.
  const std::int64_t denom = c.total * c.total - c.chance_pairs;
  if (denom == 0) return std::nullopt;
  const std::int64_t numer = c.correct * c.total - c.chance_pairs;
  return static_cast<double>(numer) / static_cast<double>(denom);
}

double collapse_stat(const numerics::Tensor& embeddings) {
  if (embeddings.rank() != 2 || embeddings.dim(0) < 2) {
    throw NumericError("collapse_stat: need a [B x D] batch with B >= 2, got " +
                       numerics::shape_string(embeddings.shape()));
  }
  const std::size_t batch = embeddings.dim(0), dim = embeddings.dim(1);
  numerics::Tensor unit = embeddings;
  for (std::size_t b = 0; b < batch; ++b) {
    double norm = 0.0;
    for (std::size_t d = 0; d < dim; ++d) norm += unit.at(b, d) * unit.at(b, d);
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      throw NumericError("collapse_stat: zero embedding in row " +
                         std::to_string(b));
    }
    for (std::size_t d = 0; d < dim; ++d) unit.at(b, d) /= norm;
  }
  // Values are shifted by the first row before the two-pass variance, so
  // identical rows give exactly zero spread.
  const double n = static_cast<double>(batch);
  double mean_std = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double origin = unit.at(0, d);
    double mean = 0.0;
    for (std::size_t b = 0; b < batch; ++b) mean += unit.at(b, d) - origin;
    mean /= n;
    double var = 0.0;
    for (std::size_t b = 0; b < batch; ++b) {
      const double dev = (unit.at(b, d) - origin) - mean;
      var += dev * dev;
    }
    mean_std += std::sqrt(var / n);
  }
  mean_std /= static_cast<double>(dim);
  return mean_std * std::sqrt(static_cast<double>(dim));
}

}  // namespace siamts::metrics
