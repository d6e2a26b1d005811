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

#include "siamts/training/classifier.h"

#include <algorithm>
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
using models::FeatureExtractor;
using models::gradients;
using models::Mlp;
using models::tensors;
using numerics::Graph;
using numerics::Shape;
using numerics::Tensor;

namespace {

inline constexpr std::uint64_t kHeadStream = 4;
inline constexpr std::size_t kInferenceChunk = 256;

Tensor features_of(const FeatureExtractor& fe, std::span<const Window> windows) {
  Tensor out(Shape{windows.size(), fe.output_width()});
  for (std::size_t start = 0; start < windows.size(); start += kInferenceChunk) {
    const std::size_t n = std::min(kInferenceChunk, windows.size() - start);
    const Tensor f = fe.features(stack_windows(windows.subspan(start, n)));
    std::copy(f.data().begin(), f.data().end(),
              out.data().begin() +
                  static_cast<std::ptrdiff_t>(start * fe.output_width()));
  }
  return out;
}

Tensor gather_rows(const Tensor& m, std::span<const std::size_t> rows) {
  const std::size_t width = m.dim(1);
  Tensor out(Shape{rows.size(), width});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = m.data().subspan(rows[r] * width, width);
    std::copy(src.begin(), src.end(),
              out.data().begin() + static_cast<std::ptrdiff_t>(r * width));
  }
  return out;
}

std::vector<int> argmax_rows(const Tensor& scores) {
  const std::size_t n = scores.dim(0), k = scores.dim(1);
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = scores.data().subspan(i * k, k);
    out[i] = static_cast<int>(std::max_element(row.begin(), row.end()) -
                              row.begin());
  }
  return out;
}

std::vector<int> predict_classes(const FeatureExtractor& fe, const Mlp& head,
                                 std::span<const Window> windows) {
  if (windows.empty()) return {};
  return argmax_rows(head.infer(features_of(fe, windows)));
}

Evaluation score(std::vector<int> truth, std::vector<int> predicted,
                 std::size_t n_classes) {
  Evaluation e;
  e.predictions.truth = std::move(truth);
  e.predictions.predicted = std::move(predicted);
  e.predictions.n_classes = static_cast<int>(n_classes);
  e.accuracy = metrics::accuracy(e.predictions);
  e.kappa = metrics::kappa(e.predictions);
  return e;
}

// Shared loop: trains `head` (and `fe` when fine-tuning) on dense labels.
ClassifierResult fit(FeatureExtractor fe, Mlp head, const LabelMap& classes,
                     std::span<const Window> train,
                     std::span<const Window> validation,
                     const TrainConfig& cfg) {
  cfg.validate();
  if (train.empty()) throw DataError("classifier: empty labelled training set");
  const std::vector<int> train_labels = classes.labels(train, "training");
  const std::vector<int> val_labels = classes.labels(validation, "validation");
  const bool finetune = cfg.finetune_extractor;
  const double lambda = fe.spec().weight_decay;

  // A frozen extractor is a fixed function of the input; embed once.
  Tensor train_features;
  if (!finetune) train_features = features_of(fe, train);

  Rng shuffle_rng = make_rng(cfg.seed, kShuffleStream);
  const std::size_t steps =
      (train.size() + cfg.batch_size - 1) / cfg.batch_size;
  Optimizer opt(cfg, steps);
  const bool watch_validation = !validation.empty();
  EarlyStopper stopper(cfg.patience, watch_validation ? MetricGoal::kMaximize
                                                      : MetricGoal::kMinimize);
  std::optional<std::pair<models::NetworkState, models::NetworkState>> best;
  TrainTrace trace;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double loss_sum = 0.0;
    for (const auto& batch :
         epoch_batches(train.size(), cfg.batch_size, shuffle_rng)) {
      std::vector<int> labels;
      for (std::size_t i : batch) labels.push_back(train_labels[i]);

      Graph g;
      std::vector<Var> head_p = bind(g, head.state(), true);
      std::vector<Var> fe_p;
      Var features;
      if (finetune) {
        fe_p = bind(g, fe.state(), true);
        std::vector<const Window*> xs;
        for (std::size_t i : batch) xs.push_back(&train[i]);
        features = fe.forward(fe_p, g.constant(stack_windows(xs)));
      } else {
        features = g.constant(gather_rows(train_features, batch));
      }
      Var ce = numerics::softmax_cross_entropy(head.forward(head_p, features),
                                               labels);
      Var total = finetune && lambda > 0.0 ? add(ce, l2_penalty(fe_p, lambda))
                                           : ce;
      const double value = ce.value().item();
      if (!std::isfinite(value) || !std::isfinite(total.value().item())) {
        throw NumericError("classifier: non-finite loss at epoch " +
                           std::to_string(epoch) + ", step " +
                           std::to_string(opt.steps() + 1));
      }
      g.backward(total);

      std::vector<Tensor*> params = tensors(head.state());
      std::vector<const Tensor*> grads = gradients(g, head_p);
      if (finetune) {
        for (Tensor* t : tensors(fe.state())) params.push_back(t);
        for (const Tensor* t : gradients(g, fe_p)) grads.push_back(t);
      }
      opt.step(params, grads);
      loss_sum += value * static_cast<double>(batch.size());
    }

    const double epoch_loss = loss_sum / static_cast<double>(train.size());
    trace.loss.push_back(epoch_loss);
    trace.collapse_stat.push_back(std::nullopt);
    double watched = epoch_loss;
    if (watch_validation) {
      const Evaluation e = score(val_labels,
                                 predict_classes(fe, head, validation),
                                 classes.size());
      watched = e.kappa.value_or(e.accuracy);
      trace.val_metric.push_back(watched);
    } else {
      trace.val_metric.push_back(std::nullopt);
    }
    if (stopper.update(watched) && cfg.early_stopping) {
      best.emplace(fe.state(), head.state());
    }
    if (cfg.early_stopping && stopper.should_stop()) break;
  }

  trace.stopped_epoch = stopper.epochs_seen();
  if (cfg.early_stopping && best) {
    trace.best_epoch = stopper.best_epoch();
    fe.state() = std::move(best->first);
    head.state() = std::move(best->second);
  } else {
    trace.best_epoch = trace.stopped_epoch;
  }
  return {{std::move(fe), std::move(head)}, std::move(trace), classes.users()};
}

Mlp fresh_head(const FeatureExtractor& fe, std::size_t n_classes,
               std::uint64_t seed) {
  Rng rng = make_rng(seed, kHeadStream);
  return models::build_mlp(models::classifier_head_spec(n_classes),
                           fe.output_width(), rng);
}

}  // namespace

ClassifierResult train_classifier(const FeatureExtractor& extractor,
                                  std::span<const Window> train,
                                  std::span<const Window> validation,
                                  const TrainConfig& cfg) {
  if (train.empty()) throw DataError("classifier: empty labelled training set");
  const LabelMap classes(train);
  return fit(extractor, fresh_head(extractor, classes.size(), cfg.seed),
             classes, train, validation, cfg);
}

ClassifierResult train_supervised(std::span<const Window> train,
                                  std::span<const Window> validation,
                                  const models::FeatureExtractorSpec& fe_spec,
                                  const TrainConfig& cfg) {
  if (train.empty()) throw DataError("supervised: empty labelled training set");
  Rng rng = make_rng(cfg.seed, kInitStream);
  FeatureExtractor fe =
      models::build_feature_extractor(fe_spec, train.front().channels(), rng);
  return train_classifier(fe, train, validation, cfg);
}

std::vector<Window> augment_training_set(std::span<const Window> train,
                                         const AugmentedSetup& setup,
                                         std::uint64_t seed) {
  if (setup.copies < 0) throw ConfigError("augmented: copies must be >= 0");
  setup.scaling.validate();
  setup.jitter.validate();
  Rng rng = make_rng(seed, kAugmentStream);
  std::vector<Window> out(train.begin(), train.end());
  for (const auto* spec : {&setup.scaling, &setup.jitter}) {
    for (int c = 0; c < setup.copies; ++c) {
      for (const Window& w : train) out.push_back(augment::apply(*spec, w, rng));
    }
  }
  return out;
}

ClassifierResult train_augmented(std::span<const Window> train,
                                 std::span<const Window> validation,
                                 const models::FeatureExtractorSpec& fe_spec,
                                 const TrainConfig& cfg,
                                 const AugmentedSetup& setup) {
  const std::vector<Window> expanded =
      augment_training_set(train, setup, cfg.seed);
  return train_supervised(expanded, validation, fe_spec, cfg);
}

ClassifierResult transfer_learn(std::span<const Window> source_train,
                                std::span<const Window> source_validation,
                                std::span<const Window> target_train,
                                std::span<const Window> target_validation,
                                const models::FeatureExtractorSpec& fe_spec,
                                const TrainConfig& cfg) {
  TrainConfig tuned = cfg;
  tuned.finetune_extractor = true;
  const ClassifierResult source =
      train_supervised(source_train, source_validation, fe_spec, tuned);
  return train_classifier(source.network.extractor, target_train,
                          target_validation, tuned);
}

Evaluation evaluate(const ClassifierResult& model,
                    std::span<const Window> windows) {
  if (windows.empty()) throw DataError("evaluate: no windows");
  const LabelMap classes(model.classes);
  return score(classes.labels(windows, "evaluation"),
               predict_classes(model.network.extractor, model.network.head,
                               windows),
               classes.size());
}

}  // namespace siamts::training
