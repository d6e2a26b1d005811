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

#include "siamts/cli/gradcheck_suite.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <string>

#include "siamts/common/random.h"
#include "siamts/models/feature_extractor.h"
#include "siamts/models/mlp.h"
#include "siamts/numerics/ops.h"
#include "siamts/training/losses.h"

namespace siamts::cli {
namespace {

using numerics::Graph;
using numerics::Shape;
using numerics::Tensor;
using numerics::Var;

// Entries drawn from +-U(0.2, 1.2): bounded away from the ReLU kink.
Tensor random_tensor(Shape shape, Rng& rng) {
  Tensor t(std::move(shape));
  std::uniform_real_distribution<double> mag(0.2, 1.2);
  std::bernoulli_distribution sign(0.5);
  for (double& v : t.data()) v = sign(rng) ? mag(rng) : -mag(rng);
  return t;
}

// sum(out * w) for a fixed random w, so every output entry carries a
// distinct weight.
Var weighted_sum(Var out, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0x77);
  Tensor w = random_tensor(out.shape(), rng);
  return numerics::sum(numerics::mul(out, out.graph().constant(std::move(w))));
}

struct Case {
  std::string name;
  numerics::ScalarGraphFn fn;
  std::vector<Shape> shapes;
};

std::vector<Case> build_cases(std::uint64_t seed) {
  using namespace numerics;
  std::vector<Case> cases;
  auto add_case = [&](std::string name, std::vector<Shape> shapes,
                      numerics::ScalarGraphFn fn) {
    cases.push_back({std::move(name), std::move(fn), std::move(shapes)});
  };
  const Shape m34{3, 4};

  add_case("add", {m34, m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(add(in[0], in[1]), seed);
  });
  add_case("sub", {m34, m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(sub(in[0], in[1]), seed);
  });
  add_case("mul", {m34, m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(mul(in[0], in[1]), seed);
  });
  add_case("scale", {m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(scale(in[0], -1.7), seed);
  });
  add_case("matmul", {{3, 4}, {4, 5}}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(matmul(in[0], in[1]), seed);
  });
  add_case("add_bias", {m34, {4}}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(add_bias(in[0], in[1]), seed);
  });
  add_case("relu", {m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(relu(in[0]), seed);
  });
  add_case("sigmoid", {m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(sigmoid(in[0]), seed);
  });
  add_case("conv1d", {{2, 7, 3}, {3, 3, 4}},
           [seed](Graph&, std::span<const Var> in) {
             return weighted_sum(conv1d(in[0], in[1], 1, 1), seed);
           });
  add_case("conv1d_strided", {{2, 8, 3}, {3, 3, 2}},
           [seed](Graph&, std::span<const Var> in) {
             return weighted_sum(conv1d(in[0], in[1], 2, 0), seed);
           });
  add_case("conv1d_unbatched", {{6, 2}, {5, 2, 3}},
           [seed](Graph&, std::span<const Var> in) {
             return weighted_sum(conv1d(in[0], in[1], 1, 2), seed);
           });
  add_case("mean_over_time", {{2, 5, 3}}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(mean_over_time(in[0]), seed);
  });
  add_case("reshape", {m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(reshape(in[0], {2, 6}), seed);
  });
  add_case("sum", {m34}, [](Graph&, std::span<const Var> in) {
    return sum(in[0]);
  });
  add_case("mean", {m34}, [](Graph&, std::span<const Var> in) {
    return mean(in[0]);
  });
  add_case("sum_squares", {m34}, [](Graph&, std::span<const Var> in) {
    return sum_squares(in[0]);
  });
  add_case("cosine_similarity", {{5}, {5}}, [](Graph&, std::span<const Var> in) {
    return cosine_similarity(in[0], in[1]);
  });
  add_case("cosine_similarity_rows", {m34, m34},
           [seed](Graph&, std::span<const Var> in) {
             return weighted_sum(cosine_similarity(in[0], in[1]), seed);
           });
  add_case("softmax", {m34}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(softmax(in[0]), seed);
  });
  add_case("softmax_cross_entropy", {{4, 3}}, [](Graph&, std::span<const Var> in) {
    static const int labels[] = {0, 2, 1, 2};
    return softmax_cross_entropy(in[0], labels);
  });
  add_case("sigmoid_cross_entropy", {{5, 1}}, [](Graph&, std::span<const Var> in) {
    static const double targets[] = {1, 0, 0, 1, 1};
    return sigmoid_cross_entropy(in[0], targets);
  });
  add_case("standardize", {{6, 3}}, [seed](Graph&, std::span<const Var> in) {
    return weighted_sum(standardize(in[0]), seed);
  });
  add_case("l2_penalty", {m34, {4}}, [](Graph&, std::span<const Var> in) {
    return training::l2_penalty(in, 0.01);
  });
  // With stop-gradient the z inputs are constants of the loss, so only the
  // p inputs are differentiated; the z values are fixed per seed.
  add_case("simsiam_loss", {{3, 5}, {3, 5}}, [seed](Graph& g, std::span<const Var> in) {
    Rng rng = make_rng(seed, 0x51);
    Var z_j = g.constant(random_tensor({3, 5}, rng));
    Var z_i = g.constant(random_tensor({3, 5}, rng));
    return training::simsiam_loss(in[0], z_j, in[1], z_i, true);
  });
  add_case("simsiam_loss_no_stopgrad", {{3, 5}, {3, 5}, {3, 5}, {3, 5}},
           [](Graph&, std::span<const Var> in) {
             return training::simsiam_loss(in[0], in[1], in[2], in[3], false);
           });

  // Layers: inputs are the data batch followed by every parameter tensor.
  auto extractor_case = [&](std::string name, std::vector<std::size_t> filters) {
    models::FeatureExtractorSpec spec;
    spec.filters = std::move(filters);
    Rng rng = make_rng(seed, 0xfe);
    const auto fe = std::make_shared<models::FeatureExtractor>(
        models::build_feature_extractor(spec, 3, rng));
    std::vector<Shape> shapes{{2, 6, 3}};
    for (std::size_t i = 0; i < fe->state().size(); ++i) {
      shapes.push_back(fe->state().tensor(i).shape());
    }
    add_case(std::move(name), shapes, [fe, seed](Graph&, std::span<const Var> in) {
      return weighted_sum(fe->forward(in.subspan(1), in[0]), seed);
    });
  };
  extractor_case("resnet_block_projection", {4, 6});
  extractor_case("resnet_block_identity", {4, 4});

  auto mlp_case = [&](std::string name, models::MlpSpec spec) {
    Rng rng = make_rng(seed, 0xd5);
    const auto mlp =
        std::make_shared<models::Mlp>(models::build_mlp(spec, 4, rng));
    std::vector<Shape> shapes{{5, 4}};
    for (std::size_t i = 0; i < mlp->state().size(); ++i) {
      shapes.push_back(mlp->state().tensor(i).shape());
    }
    add_case(std::move(name), shapes, [mlp, seed](Graph&, std::span<const Var> in) {
      return weighted_sum(mlp->forward_activated(in.subspan(1), in[0]), seed);
    });
  };
  mlp_case("dense", models::MlpSpec{{6, 3}});
  mlp_case("dense_standardized",
           models::MlpSpec{{6, 3}, models::OutputActivation::kNone, true, true});
  mlp_case("classifier_head",
           models::MlpSpec{{6, 3}, models::OutputActivation::kSoftmax});
  mlp_case("mtssl_head", models::MlpSpec{{6, 1}, models::OutputActivation::kSigmoid});
  return cases;
}

}  // namespace

bool GradcheckReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return !results.empty();
}

GradcheckReport run_gradcheck_suite(const numerics::GradcheckOptions& options,
                                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  GradcheckReport report;
  Rng rng = make_rng(seed, 0x9c);
  for (const Case& c : build_cases(seed)) {
    std::vector<Tensor> inputs;
    for (const Shape& s : c.shapes) inputs.push_back(random_tensor(s, rng));
    report.results.push_back(
        numerics::gradcheck(c.name, c.fn, std::move(inputs), options));
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

void print_gradcheck_report(std::ostream& out, const GradcheckReport& report) {
  std::size_t failed = 0;
  char line[160];
  for (const auto& r : report.results) {
    std::snprintf(line, sizeof line, "%-28s max_rel_err=%.3e entries=%-5zu %s\n",
                  r.name.c_str(), r.max_relative_error, r.entries_checked,
                  r.passed ? "PASS" : "FAIL");
    out << line;
    failed += !r.passed;
  }
  std::snprintf(line, sizeof line, "gradcheck: %zu/%zu passed in %.2fs\n",
                report.results.size() - failed, report.results.size(),
                report.seconds);
  out << line;
}

}  // namespace siamts::cli
