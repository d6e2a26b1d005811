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

#include "siamts/training/simsiam.h"

#include <cmath>
#include <optional>
#include <string>

#include "siamts/common/error.h"
#include "siamts/metrics/metrics.h"
#include "siamts/numerics/ops.h"
#include "siamts/training/common.h"
#include "siamts/training/early_stopping.h"
#include "siamts/training/losses.h"

namespace siamts::training {

using models::bind;
using models::gradients;
using models::tensors;
using numerics::Graph;
using numerics::Tensor;

namespace {

std::optional<double> embedding_spread(const models::SimSiamNetwork& net,
                                       const Tensor& probe) {
  if (probe.dim(0) < 2) return std::nullopt;
  const Tensor z = net.projector.infer(net.extractor.features(probe));
  try {
    return metrics::collapse_stat(z);
  } catch (const NumericError&) {
    // A zero embedding row is as collapsed as it gets.
    return 0.0;
  }
}

template <typename T>
void append(std::vector<T>& dst, const std::vector<T>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

SimSiamResult pretrain_simsiam(std::span<const Window> unlabelled,
                               const SimSiamSetup& setup,
                               const TrainConfig& cfg) {
  cfg.validate();
  if (unlabelled.empty()) throw DataError("simsiam: no unlabelled windows");
  if (setup.augmentations.empty()) {
    throw ConfigError("simsiam: at least one augmentation is required");
  }
  for (const auto& spec : setup.augmentations) spec.validate();

  Rng init_rng = make_rng(cfg.seed, kInitStream);
  Rng shuffle_rng = make_rng(cfg.seed, kShuffleStream);
  Rng aug_rng = make_rng(cfg.seed, kAugmentStream);
  models::SimSiamNetwork net =
      models::build_simsiam(setup.extractor, setup.projector, setup.predictor,
                            unlabelled.front().channels(), init_rng);

  const bool standardized =
      setup.projector.standardize_hidden || setup.predictor.standardize_hidden;
  const std::size_t min_batch = standardized ? 2 : 1;
  const std::size_t full = unlabelled.size() / cfg.batch_size;
  const std::size_t rest = unlabelled.size() % cfg.batch_size;
  const std::size_t steps = full + (rest >= min_batch ? 1 : 0);
  if (steps == 0) throw DataError("simsiam: not enough windows for one batch");

  const std::vector<Window> probe_windows =
      probe_subset(unlabelled, setup.collapse_probe);
  const Tensor probe = stack_windows(probe_windows);
  const double lambda = setup.extractor.weight_decay;

  Optimizer opt(cfg, steps);
  EarlyStopper stopper(cfg.patience, MetricGoal::kMinimize);
  std::optional<models::SimSiamNetwork> best;
  TrainTrace trace;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double loss_sum = 0.0;
    std::size_t seen = 0;
    for (const auto& batch :
         epoch_batches(unlabelled.size(), cfg.batch_size, shuffle_rng,
                       min_batch)) {
      std::vector<Window> view_a, view_b;
      for (std::size_t i : batch) {
        auto [a, b] = augment::sample_positive_pair(
            unlabelled[i], setup.augmentations, aug_rng, setup.composition);
        view_a.push_back(std::move(a));
        view_b.push_back(std::move(b));
      }

      Graph g;
      std::vector<Var> fe_p = bind(g, net.extractor.state(), true);
      std::vector<Var> proj_p = bind(g, net.projector.state(), true);
      std::vector<Var> pred_p = bind(g, net.predictor.state(), true);
      Var z_a = net.projector.forward(
          proj_p, net.extractor.forward(fe_p, g.constant(stack_windows(view_a))));
      Var z_b = net.projector.forward(
          proj_p, net.extractor.forward(fe_p, g.constant(stack_windows(view_b))));
      Var p_a = net.predictor.forward(pred_p, z_a);
      Var p_b = net.predictor.forward(pred_p, z_b);
      Var similarity = simsiam_loss(p_a, z_b, p_b, z_a, cfg.stop_gradient);
      Var total = lambda > 0.0 ? add(similarity, l2_penalty(fe_p, lambda))
                               : similarity;

      const double value = similarity.value().item();
      if (!std::isfinite(value) || !std::isfinite(total.value().item())) {
        throw NumericError("simsiam: non-finite loss at epoch " +
                           std::to_string(epoch) + ", step " +
                           std::to_string(opt.steps() + 1));
      }
      g.backward(total);

      std::vector<Tensor*> params = tensors(net.extractor.state());
      append(params, tensors(net.projector.state()));
      append(params, tensors(net.predictor.state()));
      std::vector<const Tensor*> grads = gradients(g, fe_p);
      append(grads, gradients(g, proj_p));
      append(grads, gradients(g, pred_p));
      opt.step(params, grads);

      loss_sum += value * static_cast<double>(batch.size());
      seen += batch.size();
    }

    const double epoch_loss = loss_sum / static_cast<double>(seen);
    trace.loss.push_back(epoch_loss);
    trace.val_metric.push_back(std::nullopt);
    trace.collapse_stat.push_back(embedding_spread(net, probe));
    if (stopper.update(epoch_loss) && cfg.early_stopping) best = net;
    if (cfg.early_stopping && stopper.should_stop()) break;
  }

  trace.stopped_epoch = stopper.epochs_seen();
  if (cfg.early_stopping && best) {
    trace.best_epoch = stopper.best_epoch();
    net = std::move(*best);
  } else {
    trace.best_epoch = trace.stopped_epoch;
  }
  return {std::move(net), std::move(trace)};
}

}  // namespace siamts::training
