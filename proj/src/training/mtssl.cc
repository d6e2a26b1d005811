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

#include "siamts/training/mtssl.h"

#include <cmath>
#include <optional>
#include <string>

#include "siamts/common/error.h"
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

MtsslResult pretrain_mtssl(std::span<const Window> unlabelled,
                           const MtsslSetup& setup, const TrainConfig& cfg) {
  cfg.validate();
  if (unlabelled.empty()) throw DataError("mtssl: no unlabelled windows");
  if (setup.tasks.empty()) throw ConfigError("mtssl: at least one task is required");
  for (const auto& spec : setup.tasks) spec.validate();

  Rng init_rng = make_rng(cfg.seed, kInitStream);
  Rng shuffle_rng = make_rng(cfg.seed, kShuffleStream);
  Rng aug_rng = make_rng(cfg.seed, kAugmentStream);
  models::MtsslNetwork net =
      models::build_mtssl(setup.extractor, unlabelled.front().channels(),
                          setup.tasks.size(), init_rng, setup.head);
  const std::size_t n_heads = net.heads.size();
  const std::size_t steps =
      (unlabelled.size() + cfg.batch_size - 1) / cfg.batch_size;
  const double lambda = setup.extractor.weight_decay;

  Optimizer opt(cfg, steps);
  EarlyStopper stopper(cfg.patience, MetricGoal::kMinimize);
  std::optional<models::MtsslNetwork> best;
  TrainTrace trace;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double loss_sum = 0.0;
    std::size_t seen = 0;
    for (const auto& batch :
         epoch_batches(unlabelled.size(), cfg.batch_size, shuffle_rng)) {
      Graph g;
      std::vector<Var> fe_p = bind(g, net.extractor.state(), true);
      std::vector<std::vector<Var>> head_p;
      for (auto& head : net.heads) head_p.push_back(bind(g, head.state(), true));

      Var task_sum;
      for (std::size_t k = 0; k < n_heads; ++k) {
        std::vector<Window> inputs;
        std::vector<double> targets;
        for (std::size_t i : batch) {
          auto [w, applied] =
              augment::mtssl_example(unlabelled[i], setup.tasks[k], aug_rng);
          inputs.push_back(std::move(w));
          targets.push_back(static_cast<double>(applied));
        }
        Var features =
            net.extractor.forward(fe_p, g.constant(stack_windows(inputs)));
        Var bce = numerics::sigmoid_cross_entropy(
            net.heads[k].forward(head_p[k], features), targets);
        task_sum = task_sum.valid() ? add(task_sum, bce) : bce;
      }
      Var task_loss = scale(task_sum, 1.0 / static_cast<double>(n_heads));
      Var total =
          lambda > 0.0 ? add(task_loss, l2_penalty(fe_p, lambda)) : task_loss;
      const double value = task_loss.value().item();
      if (!std::isfinite(value) || !std::isfinite(total.value().item())) {
        throw NumericError("mtssl: non-finite loss at epoch " +
                           std::to_string(epoch) + ", step " +
                           std::to_string(opt.steps() + 1));
      }
      g.backward(total);

      std::vector<Tensor*> params = tensors(net.extractor.state());
      std::vector<const Tensor*> grads = gradients(g, fe_p);
      for (std::size_t k = 0; k < n_heads; ++k) {
        for (Tensor* t : tensors(net.heads[k].state())) params.push_back(t);
        for (const Tensor* t : gradients(g, head_p[k])) grads.push_back(t);
      }
      opt.step(params, grads);

      loss_sum += value * static_cast<double>(batch.size());
      seen += batch.size();
    }

    const double epoch_loss = loss_sum / static_cast<double>(seen);
    trace.loss.push_back(epoch_loss);
    trace.val_metric.push_back(std::nullopt);
    trace.collapse_stat.push_back(std::nullopt);
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

std::vector<double> mtssl_head_accuracy(const models::MtsslNetwork& net,
                                        std::span<const Window> windows,
                                        const MtsslSetup& setup,
                                        std::uint64_t seed) {
  if (windows.empty()) throw DataError("mtssl: no windows to evaluate");
  if (setup.tasks.size() != net.heads.size()) {
    throw ConfigError("mtssl: task count differs from head count");
  }
  Rng rng = make_rng(seed, kAugmentStream);
  std::vector<double> out;
  for (std::size_t k = 0; k < net.heads.size(); ++k) {
    std::vector<Window> inputs;
    std::vector<int> targets;
    for (const Window& w : windows) {
      auto [x, applied] = augment::mtssl_example(w, setup.tasks[k], rng);
      inputs.push_back(std::move(x));
      targets.push_back(applied);
    }
    const Tensor prob =
        net.heads[k].infer(net.extractor.features(stack_windows(inputs)));
    std::size_t correct = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      correct += static_cast<int>(prob[i] > 0.5) == targets[i];
    }
    out.push_back(static_cast<double>(correct) /
                  static_cast<double>(targets.size()));
  }
  return out;
}

}  // namespace siamts::training
