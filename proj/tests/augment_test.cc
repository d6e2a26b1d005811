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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "augment_properties.h"
#include "siamts/common/error.h"

namespace siamts::augment {
namespace {

using testing::Property;

constexpr int kCases = 200;

class AugmentPropertyTest : public ::testing::TestWithParam<Property> {};

TEST_P(AugmentPropertyTest, HoldsOnRandomCases) {
  const testing::PropertyOutcome out =
      testing::run_property(GetParam(), kCases, 2026);
  EXPECT_EQ(out.cases, kCases);
  EXPECT_EQ(out.failures, 0) << out.first_failure;
}

INSTANTIATE_TEST_SUITE_P(
    Transforms, AugmentPropertyTest,
    ::testing::ValuesIn(testing::augment_properties()),
    [](const ::testing::TestParamInfo<Property>& info) { return info.param.name; });

Window column(std::vector<double> v) {
  Window w;
  const std::size_t steps = v.size();
  w.values = numerics::Tensor({steps, 1}, std::move(v));
  return w;
}

TEST(FlipTest, ReversesTime) {
  EXPECT_EQ(flip(column({1, 2, 3})).values, column({3, 2, 1}).values);
}

TEST(DefaultsTest, RecordingVariances) {
  EXPECT_NEAR(std::pow(AugmentationSpec::defaults(AugmentationKind::kJitter).sigma, 2),
              0.8, 1e-12);
  const auto scaling = AugmentationSpec::defaults(AugmentationKind::kRandomScaling);
  EXPECT_DOUBLE_EQ(scaling.mu, 1.0);
  EXPECT_NEAR(scaling.sigma * scaling.sigma, 0.65, 1e-12);
  const auto warp = AugmentationSpec::defaults(AugmentationKind::kMagnitudeWarp);
  EXPECT_EQ(warp.knots, 4);
  EXPECT_DOUBLE_EQ(warp.sigma, 0.2);
  EXPECT_DOUBLE_EQ(AugmentationSpec::defaults(AugmentationKind::kDrop).fraction, 0.1);
}

TEST(RecipeTest, PairAndMultiTaskRecipes) {
  const auto music = musicid_pair_recipe();
  ASSERT_EQ(music.size(), 2u);
  EXPECT_EQ(music[0].kind, AugmentationKind::kRandomScaling);
  EXPECT_EQ(music[1].kind, AugmentationKind::kJitter);
  const auto mmi = mmi_pair_recipe();
  ASSERT_EQ(mmi.size(), 2u);
  EXPECT_EQ(mmi[0].kind, AugmentationKind::kRandomScaling);
  EXPECT_EQ(mmi[1].kind, AugmentationKind::kFlip);
  EXPECT_EQ(musicid_mtssl_recipe().size(), 10u);
  EXPECT_EQ(mmi_mtssl_recipe().size(), 4u);
}

TEST(RecipeTest, NamesRoundTrip) {
  for (AugmentationKind kind : all_augmentation_kinds()) {
    EXPECT_EQ(parse_augmentation_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_augmentation_kind("mixup"), ConfigError);
}

TEST(PairTest, EmptyRecipeRejected) {
  Rng rng = make_rng(0, 0);
  EXPECT_THROW(sample_positive_pair(column({1, 2}), {}, rng), ConfigError);
}

TEST(PairTest, ViewsDifferButShareTheSource) {
  Rng rng = make_rng(1, 0);
  Window x = column({1, 2, 3, 4, 5, 6});
  const auto [a, b] = sample_positive_pair(x, musicid_pair_recipe(), rng);
  EXPECT_NE(a.values, b.values);
  EXPECT_EQ(a.values.shape(), x.values.shape());
}

TEST(MtsslExampleTest, LabelBalance) {
  Rng rng = make_rng(2, 0);
  const Window x = column({1, 2, 3});
  const auto spec = AugmentationSpec::defaults(AugmentationKind::kNegation);
  int ones = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) ones += mtssl_example(x, spec, rng).second;
  EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 0.02);
}

TEST(ValidationTest, OutOfRangeParameters) {
  AugmentationSpec s = AugmentationSpec::defaults(AugmentationKind::kDrop);
  s.fraction = 1.5;
  EXPECT_THROW(s.validate(), ConfigError);
  s = AugmentationSpec::defaults(AugmentationKind::kTimeWarp);
  s.knots = 1;
  EXPECT_THROW(s.validate(), ConfigError);
  s = AugmentationSpec::defaults(AugmentationKind::kJitter);
  s.sigma = -0.1;
  EXPECT_THROW(s.validate(), ConfigError);
  Rng rng = make_rng(3, 0);
  EXPECT_THROW(permutation(column({1, 2, 3}), 4, rng), ConfigError);
  EXPECT_THROW(random_sampling(column({1, 2, 3, 4}), 0.2, rng), ConfigError);
}

}  // namespace
}  // namespace siamts::augment
