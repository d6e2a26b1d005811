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


#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "siamts/common/error.h"
#include "siamts/common/random.h"
#include "siamts/numerics/adam.h"
#include "siamts/numerics/gradcheck.h"
#include "siamts/numerics/graph.h"
#include "siamts/numerics/ops.h"
#include "siamts/numerics/tensor.h"

namespace siamts::numerics {
namespace {

Tensor random_tensor(Shape shape, Rng& rng, double scale = 1.0) {
  Tensor t(std::move(shape));
  std::normal_distribution<double> normal(0.0, scale);
  for (double& v : t.data()) v = normal(rng);
  return t;
}

// Plain loops over [T x C_in] with [K x C_in x C_out] kernels.
Tensor naive_conv(const Tensor& x, const Tensor& k, std::size_t stride,
                  std::size_t padding) {
  const std::size_t steps = x.dim(0), c_in = x.dim(1);
  const std::size_t width = k.dim(0), c_out = k.dim(2);
  const std::size_t out_steps = (steps + 2 * padding - width) / stride + 1;
  Tensor y({out_steps, c_out});
  for (std::size_t t = 0; t < out_steps; ++t) {
    for (std::size_t o = 0; o < c_out; ++o) {
      double acc = 0.0;
      for (std::size_t j = 0; j < width; ++j) {
        const long src = static_cast<long>(t * stride + j) -
                         static_cast<long>(padding);
        if (src < 0 || src >= static_cast<long>(steps)) continue;
        for (std::size_t c = 0; c < c_in; ++c) {
          acc += x.at(static_cast<std::size_t>(src), c) *
                 k[(j * c_in + c) * c_out + o];
        }
      }
      y.at(t, o) = acc;
    }
  }
  return y;
}

TEST(GraphTest, ElementwiseAdd) {
  Graph g;
  Var r = add(g.constant(Tensor::vector({1, 2})),
              g.constant(Tensor::vector({3, 4})));
  EXPECT_EQ(r.value(), Tensor::vector({4, 6}));
}

TEST(GraphTest, IdentityMatmul) {
  Graph g;
  Var eye = g.constant(Tensor::matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  Var v = g.constant(Tensor::matrix(3, 1, {2.5, -1, 7}));
  const Tensor product = matmul(eye, v).value();
  EXPECT_EQ(product, v.value());
}

TEST(GraphTest, Relu) {
  Graph g;
  EXPECT_EQ(relu(g.constant(Tensor::vector({-1, 0, 2}))).value(),
            Tensor::vector({0, 0, 2}));
}

TEST(GraphTest, SquareGradient) {
  Tensor w = Tensor::scalar(3.0);
  Graph g;
  Var x = g.parameter(&w);
  g.backward(x * x);
  EXPECT_DOUBLE_EQ((*g.grad(x))[0], 6.0);
}

TEST(GraphTest, StopGradientTreatsFactorAsConstant) {
  Tensor w = Tensor::vector({1, 2});
  Graph g;
  Var x = g.parameter(&w);
  g.backward(sum(stop_gradient(x) * x));
  EXPECT_EQ(*g.grad(x), Tensor::vector({1, 2}));
}

TEST(GraphTest, LeafBehindStopGradientGetsNoGradient) {
  Tensor a = Tensor::vector({1, -2, 3});
  Tensor b = Tensor::vector({0.5, 0.5, 0.5});
  Graph g;
  Var va = g.parameter(&a);
  Var vb = g.parameter(&b);
  g.backward(sum(stop_gradient(va) * vb));
  const Tensor* ga = g.grad(va);
  if (ga != nullptr) {
    for (double v : ga->data()) EXPECT_EQ(v, 0.0);
  }
  EXPECT_EQ(*g.grad(vb), a);
}

TEST(GraphTest, NonScalarRootRejected) {
  Tensor w = Tensor::vector({1, 2});
  Graph g;
  Var x = g.parameter(&w);
  EXPECT_THROW(g.backward(x), NumericError);
}

TEST(GraphTest, NanGradientNamesOp) {
  Tensor w = Tensor::vector({1, 2});
  Graph g;
  Var x = g.parameter(&w);
  Var poisoned = g.record("poison", {x}, x.value(), [](Graph& gr, std::size_t self) {
    const std::size_t in = gr.node(self).inputs[0];
    gr.grad_buffer(in).fill(std::nan(""));
  });
  try {
    g.backward(sum(poisoned));
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("poison"), std::string::npos)
        << e.what();
  }
}

TEST(GraphTest, ShapeMismatchNamesOpAndShapes) {
  Graph g;
  try {
    add(g.constant(Tensor::vector({1, 2})),
        g.constant(Tensor::vector({1, 2, 3})));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("add"), std::string::npos) << msg;
    EXPECT_NE(msg.find("3"), std::string::npos) << msg;
  }
}

TEST(GraphTest, DeterministicForwardAndBackward) {
  auto run = [] {
    Rng rng = make_rng(5, 0);
    Tensor x = random_tensor({12, 3}, rng);
    Tensor k = random_tensor({3, 3, 4}, rng);
    Graph g;
    Var vk = g.parameter(&k);
    Var y = sum_squares(relu(conv1d(g.constant(x), vk, 1, 1)));
    g.backward(y);
    return std::make_pair(y.value(), *g.grad(vk));
  };
  EXPECT_EQ(run(), run());
}

TEST(CosineTest, Examples) {
  Graph g;
  auto cos = [&](std::vector<double> p, std::vector<double> z) {
    return cosine_similarity(g.constant(Tensor::vector(p)),
                             g.constant(Tensor::vector(z)))
        .value()
        .item();
  };
  EXPECT_NEAR(cos({1, 1}, {1, 1}), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(cos({1, 0}, {0, 1}), 0.0);
  EXPECT_NEAR(cos({1, 2, 3}, {4, 5, 6}),
              32.0 / (std::sqrt(14.0) * std::sqrt(77.0)), 1e-15);
}

TEST(CosineTest, ZeroNormRejected) {
  Graph g;
  EXPECT_THROW(cosine_similarity(g.constant(Tensor::vector({0, 0})),
                                 g.constant(Tensor::vector({1, 0}))),
               NumericError);
}

TEST(CosineTest, SymmetricBoundedAndScaleInvariant) {
  Rng rng = make_rng(17, 0);
  std::uniform_real_distribution<double> pos(0.01, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 9;
    Tensor p = random_tensor({d}, rng), z = random_tensor({d}, rng);
    const double a = pos(rng), b = pos(rng);
    Tensor pa = p, zb = z;
    for (double& v : pa.data()) v *= a;
    for (double& v : zb.data()) v *= b;
    Graph g;
    const double pz =
        cosine_similarity(g.constant(p), g.constant(z)).value().item();
    const double zp =
        cosine_similarity(g.constant(z), g.constant(p)).value().item();
    const double scaled =
        cosine_similarity(g.constant(pa), g.constant(zb)).value().item();
    EXPECT_EQ(pz, zp);
    EXPECT_LE(std::abs(pz), 1.0 + 1e-12);
    EXPECT_NEAR(scaled, pz, 1e-12);
  }
}

TEST(Conv1dTest, ZeroInputGivesZeroOutput) {
  Rng rng = make_rng(1, 0);
  Graph g;
  Var y = conv1d(g.constant(Tensor({6, 2})),
                 g.constant(random_tensor({3, 2, 5}, rng)), 1, 1);
  for (double v : y.value().data()) EXPECT_EQ(v, 0.0);
}

TEST(Conv1dTest, MovingSum) {
  Graph g;
  Var y = conv1d(g.constant(Tensor({5, 1}, {1, 2, 3, 4, 5})),
                 g.constant(Tensor({3, 1, 1}, {1, 1, 1})), 1, 0);
  EXPECT_EQ(y.value(), Tensor({3, 1}, {6, 9, 12}));
}

TEST(Conv1dTest, MatchesNaiveLoops) {
  Rng rng = make_rng(2, 0);
  for (std::size_t stride : {1, 2, 3}) {
    for (std::size_t padding : {0, 1, 2}) {
      Tensor x = random_tensor({8, 2}, rng);
      Tensor k = random_tensor({3, 2, 4}, rng);
      Graph g;
      Var y = conv1d(g.constant(x), g.constant(k), stride, padding);
      const Tensor want = naive_conv(x, k, stride, padding);
      ASSERT_EQ(y.shape(), want.shape());
      for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(y.value()[i], want[i], 1e-12);
      }
    }
  }
}

TEST(Conv1dTest, BatchedMatchesPerWindow) {
  Rng rng = make_rng(3, 0);
  Tensor x = random_tensor({3, 7, 2}, rng);
  Tensor k = random_tensor({3, 2, 4}, rng);
  Graph g;
  const Tensor y = conv1d(g.constant(x), g.constant(k), 1, 1).value();
  ASSERT_EQ(y.shape(), (Shape{3, 7, 4}));
  for (std::size_t b = 0; b < 3; ++b) {
    Tensor xb({7, 2});
    std::copy_n(x.raw() + b * 14, 14, xb.raw());
    const Tensor want = naive_conv(xb, k, 1, 1);
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_NEAR(y[b * 28 + i], want[i], 1e-12);
    }
  }
}

TEST(Conv1dTest, KernelWiderThanInputRejected) {
  Graph g;
  EXPECT_THROW(conv1d(g.constant(Tensor({2, 1})),
                      g.constant(Tensor({5, 1, 1})), 1, 1),
               ShapeError);
}

TEST(AdamTest, ZeroGradientLeavesParameters) {
  Tensor w = Tensor::vector({1.5, -2.0});
  const Tensor g = Tensor::vector({0, 0});
  AdamState state;
  Tensor* params[] = {&w};
  const Tensor* grads[] = {&g};
  for (int i = 0; i < 5; ++i) adam_step(params, grads, state, 0.1);
  EXPECT_EQ(w, Tensor::vector({1.5, -2.0}));
}

TEST(AdamTest, FirstStepMovesByLearningRate) {
  Tensor w = Tensor::scalar(0.0);
  const Tensor g = Tensor::scalar(1.0);
  AdamState state;
  Tensor* params[] = {&w};
  const Tensor* grads[] = {&g};
  adam_step(params, grads, state, 0.1);
  // m_hat = 1, v_hat = 1: step = lr / (1 + eps).
  EXPECT_NEAR(w.item(), -0.1 / (1.0 + 1e-8), 1e-15);
}

TEST(AdamTest, ConstantGradientDescends) {
  Tensor w = Tensor::vector({0.0, 0.0});
  const Tensor g = Tensor::vector({2.0, -0.5});
  AdamState state;
  Tensor* params[] = {&w};
  const Tensor* grads[] = {&g};
  double prev0 = 0.0, prev1 = 0.0;
  for (int i = 0; i < 50; ++i) {
    adam_step(params, grads, state, 0.01);
    EXPECT_LT(w[0], prev0);
    EXPECT_GT(w[1], prev1);
    prev0 = w[0];
    prev1 = w[1];
  }
}

TEST(DecayedLrTest, Schedule) {
  EXPECT_DOUBLE_EQ(decayed_lr(0.01, 0, 0.96, 10), 0.01);
  EXPECT_DOUBLE_EQ(decayed_lr(0.01, 12345, 1.0, 10), 0.01);
  EXPECT_NEAR(decayed_lr(0.01, 200, 0.9, 100), 0.0081, 1e-15);
  EXPECT_NEAR(decayed_lr(0.01, 50, 0.9, 100), 0.01 * std::sqrt(0.9), 1e-15);
}

// Small random conv -> relu -> dense -> cosine graphs.
TEST(GradcheckTest, RandomComposites) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng = make_rng(seed, 0);
    std::vector<Tensor> inputs = {
        random_tensor({1, 6, 2}, rng), random_tensor({3, 2, 3}, rng),
        random_tensor({3, 4}, rng), random_tensor({4}, rng),
        random_tensor({4}, rng)};
    auto fn = [](Graph&, std::span<const Var> v) {
      Var h = mean_over_time(relu(conv1d(v[0], v[1], 1, 1)));
      Var d = add_bias(matmul(h, v[2]), v[3]);
      return cosine_similarity(reshape(d, {4}), v[4]);
    };
    const GradcheckResult r =
        gradcheck("composite", fn, std::move(inputs));
    EXPECT_TRUE(r.passed) << "seed " << seed << " err "
                          << r.max_relative_error;
    EXPECT_LT(r.max_relative_error, 1e-4);
  }
}

TEST(GradcheckTest, InjectedFaultIsCaught) {
  Rng rng = make_rng(4, 0);
  GradcheckOptions options;
  options.analytic_perturbation = 0.01;
  auto fn = [](Graph&, std::span<const Var> v) { return sum_squares(v[0]); };
  const GradcheckResult r =
      gradcheck("square", fn, {random_tensor({5}, rng)}, options);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.max_relative_error, 1e-4);
}

TEST(StandardizeTest, ZeroMeanUnitVariancePerColumn) {
  Rng rng = make_rng(6, 0);
  Tensor x = random_tensor({16, 3}, rng, 4.0);
  Graph g;
  const Tensor y = standardize(g.constant(x)).value();
  for (std::size_t c = 0; c < 3; ++c) {
    double m = 0.0, v = 0.0;
    for (std::size_t r = 0; r < 16; ++r) m += y.at(r, c) / 16;
    for (std::size_t r = 0; r < 16; ++r) v += std::pow(y.at(r, c) - m, 2) / 16;
    EXPECT_NEAR(m, 0.0, 1e-12);
    EXPECT_NEAR(v, 1.0, 1e-5);
  }
}

}  // namespace
}  // namespace siamts::numerics
