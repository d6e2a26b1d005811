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
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "siamts/common/error.h"
#include "siamts/common/random.h"
#include "siamts/models/checkpoint.h"
#include "siamts/models/feature_extractor.h"
#include "siamts/models/mlp.h"
#include "siamts/models/networks.h"

namespace siamts::models {
namespace {

Window random_window(std::size_t steps, std::size_t channels, Rng& rng) {
  Window w;
  w.values = Tensor({steps, channels});
  std::normal_distribution<double> normal;
  for (double& v : w.values.data()) v = normal(rng);
  return w;
}

Tensor as_batch(const Window& w) {
  return w.values.reshaped({1, w.steps(), w.channels()});
}

TEST(FeatureExtractorTest, ParameterCountsOfReferenceConfigs) {
  Rng rng = make_rng(0, 0);
  // Stem 3*24*128 + 128; block 3*128*256 + 256 + 3*256*256 + 256 + 128*256.
  EXPECT_EQ(build_feature_extractor({{128, 256}}, 24, rng).state().parameter_count(),
            337536u);
  // Stem 3*40*48 + 48; block 3*48*96 + 96 + 3*96*96 + 96 + 48*96.
  EXPECT_EQ(build_feature_extractor({{48, 96}}, 40, rng).state().parameter_count(),
            52080u);
  EXPECT_EQ(build_feature_extractor({{32}}, 8, rng).state().parameter_count(), 800u);
  // Equal widths need no projection: 800 + 2 * (3*32*32 + 32).
  EXPECT_EQ(build_feature_extractor({{32, 32}}, 8, rng).state().parameter_count(),
            7008u);
}

TEST(FeatureExtractorTest, OutputWidthAndFiniteness) {
  Rng rng = make_rng(1, 0);
  for (const auto& filters : std::vector<std::vector<std::size_t>>{
           {8}, {8, 16}, {4, 8, 16, 32}}) {
    const FeatureExtractor fe = build_feature_extractor({filters}, 3, rng);
    const Tensor f = fe.features(as_batch(random_window(12, 3, rng)));
    EXPECT_EQ(f.shape(), (numerics::Shape{1, filters.back()}));
    EXPECT_TRUE(f.all_finite());
  }
}

TEST(FeatureExtractorTest, ZeroInputGivesZeroFeatures) {
  Rng rng = make_rng(2, 0);
  const FeatureExtractor fe = build_feature_extractor({{6, 12}}, 4, rng);
  const Tensor f = fe.features(Tensor({2, 10, 4}));
  for (double v : f.data()) EXPECT_EQ(v, 0.0);
}

TEST(FeatureExtractorTest, ZeroResidualBlockIsIdentity) {
  Rng rng = make_rng(3, 0);
  const FeatureExtractor stem = build_feature_extractor({{6}}, 3, rng);
  FeatureExtractor deep = build_feature_extractor({{6, 6}}, 3, rng);
  deep.state().at("conv0.w") = stem.state().at("conv0.w");
  deep.state().at("block1.conv_a.w").fill(0.0);
  deep.state().at("block1.conv_b.w").fill(0.0);
  const Tensor x = as_batch(random_window(9, 3, rng));
  // relu(0 + h) = h since h is already rectified.
  EXPECT_EQ(deep.features(x), stem.features(x));
}

TEST(FeatureExtractorTest, InvalidSpecsRejected) {
  Rng rng = make_rng(4, 0);
  EXPECT_THROW(build_feature_extractor({{}}, 3, rng), ConfigError);
  EXPECT_THROW(build_feature_extractor({{4, 0}}, 3, rng), ConfigError);
  FeatureExtractorSpec even{{4}};
  even.kernel_size = 2;
  EXPECT_THROW(build_feature_extractor(even, 3, rng), ConfigError);
}

TEST(EncodeTest, DeterministicWithProjectorWidth) {
  Rng rng = make_rng(5, 0);
  const FeatureExtractor fe = build_feature_extractor({{8, 16}}, 3, rng);
  const Mlp proj = build_mlp({{32, 24}}, 16, rng);
  const Window x = random_window(10, 3, rng);
  const Tensor a = encode(fe, proj, x);
  EXPECT_EQ(a, encode(fe, proj, x));
  EXPECT_EQ(a.size(), 24u);
}

TEST(EncodeTest, IdentityProjectorPassesFeaturesThrough) {
  Rng rng = make_rng(6, 0);
  const FeatureExtractor fe = build_feature_extractor({{8, 16}}, 3, rng);
  MlpSpec spec{{16, 16}};
  spec.hidden_relu = false;
  Mlp proj = build_mlp(spec, 16, rng);
  for (const char* name : {"dense0.w", "dense1.w"}) {
    Tensor& w = proj.state().at(name);
    w.fill(0.0);
    for (std::size_t i = 0; i < 16; ++i) w.at(i, i) = 1.0;
  }
  const Window x = random_window(10, 3, rng);
  const Tensor z = encode(fe, proj, x);
  const Tensor f = fe.features(as_batch(x));
  ASSERT_EQ(z.size(), f.size());
  for (std::size_t i = 0; i < z.size(); ++i) EXPECT_EQ(z[i], f[i]);
}

TEST(PredictorTest, DefaultPredictorMapsEmbeddingOntoItself) {
  Rng rng = make_rng(7, 0);
  const SimSiamNetwork net = build_simsiam({{4, 8}}, default_projector_spec(),
                                           default_predictor_spec(), 2, rng);
  EXPECT_EQ(default_predictor_spec().widths, (std::vector<std::size_t>{2048, 512}));
  const Tensor z = encode(net.extractor, net.projector, random_window(6, 2, rng));
  EXPECT_EQ(z.size(), 512u);
  const Tensor p = predict(net.predictor, z);
  EXPECT_EQ(p.size(), 512u);
  EXPECT_EQ(p, predict(net.predictor, z));
}

TEST(PredictorTest, WidthMismatchRejectedAtBuild) {
  Rng rng = make_rng(8, 0);
  EXPECT_THROW(build_simsiam({{4}}, MlpSpec{{16, 16}}, MlpSpec{{32, 8}}, 2, rng),
               ConfigError);
}

TEST(ClassifyTest, SoftmaxOutputs) {
  Rng rng = make_rng(9, 0);
  const FeatureExtractor fe = build_feature_extractor({{8, 16}}, 3, rng);
  const Mlp head = build_mlp(classifier_head_spec(5), 16, rng);
  EXPECT_EQ(classifier_head_spec(5).widths, (std::vector<std::size_t>{256, 64, 5}));
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor p = classify(fe, head, random_window(10, 3, rng));
    double total = 0.0;
    for (double v : p.data()) {
      EXPECT_GE(v, 0.0);
      total += v;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
  const Mlp single = build_mlp(classifier_head_spec(1), 16, rng);
  const Tensor one = classify(fe, single, random_window(10, 3, rng));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_DOUBLE_EQ(one[0], 1.0);
}

TEST(ClassifyTest, ArgmaxStableUnderLogitShift) {
  Rng rng = make_rng(10, 0);
  Mlp head = build_mlp(classifier_head_spec(4), 6, rng);
  Tensor x({3, 6});
  std::normal_distribution<double> normal;
  for (double& v : x.data()) v = normal(rng);
  const Tensor before = head.infer(x);
  for (double& b : head.state().at("dense2.b").data()) b += 7.5;
  const Tensor after = head.infer(x);
  for (std::size_t r = 0; r < 3; ++r) {
    std::size_t a = 0, b = 0;
    for (std::size_t c = 1; c < 4; ++c) {
      if (before.at(r, c) > before.at(r, a)) a = c;
      if (after.at(r, c) > after.at(r, b)) b = c;
    }
    EXPECT_EQ(a, b);
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_NEAR(before.at(r, c), after.at(r, c), 1e-12);
    }
  }
}

TEST(MtsslNetworkTest, HeadsAreSigmoidUnits) {
  Rng rng = make_rng(11, 0);
  for (std::size_t heads : {1u, 4u, 10u}) {
    const MtsslNetwork net = build_mtssl({{4, 8}}, 2, heads, rng);
    ASSERT_EQ(net.heads.size(), heads);
    const Tensor f = net.extractor.features(as_batch(random_window(6, 2, rng)));
    for (const Mlp& h : net.heads) {
      const Tensor y = h.infer(f);
      ASSERT_EQ(y.size(), 1u);
      EXPECT_GT(y[0], 0.0);
      EXPECT_LT(y[0], 1.0);
    }
  }
}

TEST(CheckpointTest, RoundTripOfFloatValues) {
  Rng rng = make_rng(12, 0);
  NetworkState state = build_feature_extractor({{4, 8}}, 3, rng).state();
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (double& v : state.tensor(i).data()) v = static_cast<float>(v);
  }
  std::stringstream buf;
  write_checkpoint(buf, state);
  const NetworkState back = read_checkpoint(buf);
  EXPECT_TRUE(back == state);
  EXPECT_EQ(back.name(0), "conv0.w");
}

TEST(CheckpointTest, RejectsForeignAndTruncatedInput) {
  std::stringstream bad("NOPE1234");
  EXPECT_THROW(read_checkpoint(bad), DataError);
  Rng rng = make_rng(13, 0);
  std::stringstream buf;
  write_checkpoint(buf, build_feature_extractor({{4}}, 2, rng).state());
  std::string bytes = buf.str();
  bytes.resize(bytes.size() - 3);
  std::stringstream cut(bytes);
  EXPECT_THROW(read_checkpoint(cut), DataError);
}

TEST(InitTest, HeUniformBounds) {
  Rng rng = make_rng(14, 0);
  const Tensor w = he_uniform({50, 40}, 50, rng);
  const double bound = std::sqrt(6.0 / 50.0);
  for (double v : w.data()) {
    EXPECT_GE(v, -bound);
    EXPECT_LE(v, bound);
  }
}

}  // namespace
}  // namespace siamts::models
