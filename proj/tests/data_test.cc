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


#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "siamts/common/error.h"
#include "siamts/common/random.h"
#include "siamts/data/corpus.h"
#include "siamts/data/corpus_io.h"
#include "siamts/data/splits.h"
#include "siamts/data/synth.h"
#include "siamts/data/windowing.h"

namespace siamts::data {
namespace {

using numerics::Shape;
using numerics::Tensor;

std::vector<SessionRecording> corpus(std::size_t users, std::size_t sessions,
                                     std::size_t length, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0);
  return synth_generate(users, sessions, length, 3, rng);
}

std::set<std::pair<int, int>> sessions_of(const std::vector<Window>& ws) {
  std::set<std::pair<int, int>> out;
  for (const Window& w : ws) out.insert({w.user_id.value_or(-1), w.session_id});
  return out;
}

// Fingerprint by content; unlabelled windows lose their user id.
std::set<std::vector<double>> contents(const std::vector<Window>& ws) {
  std::set<std::vector<double>> out;
  for (const Window& w : ws) {
    const auto v = w.values.data();
    out.insert(std::vector<double>(v.begin(), v.end()));
  }
  return out;
}

TEST(WindowingTest, HundredSamplesThirtyStepsHalfOverlap) {
  EXPECT_EQ(window_stride(30, 0.5), 15u);
  const auto starts = testing::windowed_starts(100, 30, 0.5);
  EXPECT_EQ(starts, (std::vector<std::size_t>{0, 15, 30, 45, 60}));
  EXPECT_EQ(starts, testing::enumerate_window_starts(100, 30, 0.5));
}

TEST(WindowingTest, MatchesEnumerationOracle) {
  Rng rng = make_rng(41, 0);
  std::uniform_int_distribution<std::size_t> steps_d(1, 40), extra(0, 120);
  std::uniform_real_distribution<double> ov(0.0, 0.95);
  for (int i = 0; i < 200; ++i) {
    const std::size_t steps = steps_d(rng);
    const std::size_t length = steps + extra(rng);
    for (double overlap : {0.0, 0.5, ov(rng)}) {
      ASSERT_EQ(testing::windowed_starts(length, steps, overlap),
                testing::enumerate_window_starts(length, steps, overlap))
          << "L=" << length << " T=" << steps << " overlap=" << overlap;
    }
  }
}

TEST(WindowingTest, ZeroOverlapTiles) {
  EXPECT_EQ(testing::windowed_starts(95, 30, 0.0),
            (std::vector<std::size_t>{0, 30, 60}));
}

TEST(WindowingTest, SessionOfExactlyOneWindow) {
  for (double overlap : {0.0, 0.25, 0.5, 0.9}) {
    EXPECT_EQ(testing::windowed_starts(30, 30, overlap).size(), 1u);
  }
}

TEST(WindowingTest, ShortSessionSkippedWithWarning) {
  auto recs = corpus(1, 2, 40, 1);
  recs[1].samples = Tensor({10, 3}, 0.0);
  std::vector<std::string> warnings;
  const auto ws = window_sessions(recs, 30, 0.5, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("session 1"), std::string::npos);
  for (const Window& w : ws) EXPECT_EQ(w.session_id, 0);
}

TEST(WindowingTest, WindowsCarryIdsAndNeverSpanSessions) {
  const auto recs = corpus(2, 3, 50, 2);
  const auto ws = window_sessions(recs, 20, 0.5);
  ASSERT_FALSE(ws.empty());
  for (const Window& w : ws) {
    const auto& rec = *std::find_if(recs.begin(), recs.end(), [&](const auto& r) {
      return r.user_id == *w.user_id && r.session_id == w.session_id;
    });
    // The window must be a contiguous run of its own session.
    bool found = false;
    for (std::size_t off = 0; off + 20 <= rec.length() && !found; ++off) {
      found = std::equal(w.values.data().begin(), w.values.data().end(),
                         rec.samples.data().begin() + off * 3);
    }
    EXPECT_TRUE(found);
  }
}

TEST(WindowingTest, InvalidOverlap) {
  EXPECT_THROW(window_stride(30, 1.0), ConfigError);
  EXPECT_THROW(window_stride(30, -0.1), ConfigError);
}

TEST(SplitTest, TwentyUsersSplitSixFourteen) {
  const auto recs = corpus(20, 1, 8, 3);
  Rng rng = make_rng(5, 11);
  const DatasetSplit s = split_dataset(recs, 1.0 / 3.0, rng);
  EXPECT_EQ(user_ids(s.d1).size(), 6u);
  EXPECT_EQ(user_ids(s.d2).size(), 14u);
}

TEST(SplitTest, HundredNineUsersSplitThirtySixSeventyThree) {
  const auto recs = corpus(109, 1, 8, 4);
  Rng rng = make_rng(5, 11);
  const DatasetSplit s = split_dataset(recs, 1.0 / 3.0, rng);
  EXPECT_EQ(user_ids(s.d1).size(), 36u);
  EXPECT_EQ(user_ids(s.d2).size(), 73u);
}

TEST(SplitTest, DisjointAndExhaustive) {
  const auto recs = corpus(12, 2, 8, 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng = make_rng(seed, 11);
    const DatasetSplit s = split_dataset(recs, 1.0 / 3.0, rng);
    const auto a = user_ids(s.d1), b = user_ids(s.d2);
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    EXPECT_TRUE(both.empty());
    EXPECT_EQ(a.size() + b.size(), 12u);
    EXPECT_EQ(s.d1.size() + s.d2.size(), recs.size());
  }
}

TEST(SplitTest, EmptySideRejected) {
  const auto recs = corpus(2, 1, 8, 6);
  Rng rng = make_rng(0, 11);
  EXPECT_THROW(split_dataset(recs, 0.1, rng), ConfigError);
  EXPECT_THROW(split_dataset(recs, 1.0, rng), ConfigError);
  EXPECT_THROW(split_dataset(corpus(1, 1, 8, 6), 0.5, rng), ConfigError);
}

class ScenarioTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto recs = corpus(9, 6, 60, 7);
    Rng rng = make_rng(7, 11);
    const DatasetSplit s = split_dataset(recs, 1.0 / 3.0, rng);
    d1 = partition_sessions(s.d1, SessionRoles{}, 20);
    d2 = partition_sessions(s.d2, SessionRoles{}, 20);
  }
  SplitPools d1, d2;
};

TEST_F(ScenarioTest, EvaluationSessionsNeverTrainedOn) {
  for (const SplitPools* p : {&d1, &d2}) {
    const auto held = sessions_of(p->validation);
    const auto test = sessions_of(p->test);
    for (const auto& pool : {p->unlabelled, p->labelled}) {
      for (const auto& key : sessions_of(pool)) {
        EXPECT_FALSE(held.contains(key));
        EXPECT_FALSE(test.contains(key));
      }
    }
    for (const auto& key : held) EXPECT_FALSE(test.contains(key));
  }
}

TEST_F(ScenarioTest, ScenarioOneDrawsUnlabelledFromOtherUsers) {
  const ScenarioSplit s = make_scenario(1, d1, d2, 0.5, 3);
  for (const Window& w : s.unlabelled) EXPECT_FALSE(w.user_id.has_value());
  EXPECT_EQ(contents(s.unlabelled), contents(d1.unlabelled));
  std::set<int> labelled;
  for (const Window& w : s.labelled) labelled.insert(*w.user_id);
  for (int u : d1.users) EXPECT_FALSE(labelled.contains(u));
  EXPECT_EQ(s.source_labelled.size(), d1.labelled.size());
}

TEST_F(ScenarioTest, ScenarioTwoFullFractionKeepsAllLabels) {
  const ScenarioSplit s = make_scenario(2, d1, d2, 1.0, 3);
  EXPECT_EQ(contents(s.labelled), contents(d2.labelled));
  EXPECT_EQ(s.labelled.size(), d2.labelled.size());
  EXPECT_EQ(contents(s.unlabelled), contents(d2.unlabelled));
  EXPECT_TRUE(s.source_labelled.empty());
}

TEST_F(ScenarioTest, ScenarioThreeCoversAllUsers) {
  const ScenarioSplit s = make_scenario(3, d1, d2, 0.5, 3);
  std::set<int> classes;
  for (const Window& w : s.test) classes.insert(*w.user_id);
  EXPECT_EQ(classes.size(), d1.users.size() + d2.users.size());
  EXPECT_EQ(classes.size(), 9u);
}

TEST_F(ScenarioTest, FractionSubsetsAreNestedAndBalanced) {
  const auto small = subsample_per_user(d2.labelled, 0.2, 9);
  const auto large = subsample_per_user(d2.labelled, 0.6, 9);
  const auto big = contents(large);
  for (const auto& v : contents(small)) EXPECT_TRUE(big.contains(v));
  std::map<int, std::size_t> per_user, drawn;
  for (const Window& w : d2.labelled) ++per_user[*w.user_id];
  for (const Window& w : large) ++drawn[*w.user_id];
  for (const auto& [u, n] : per_user) {
    EXPECT_EQ(drawn[u], static_cast<std::size_t>(std::lround(0.6 * n)));
  }
}

TEST_F(ScenarioTest, StarvedFractionNamesUsers) {
  try {
    make_scenario(2, d1, d2, 0.01, 3);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("users"), std::string::npos);
  }
  EXPECT_THROW(make_scenario(2, d1, d2, 0.0, 3), ConfigError);
  EXPECT_THROW(make_scenario(4, d1, d2, 0.5, 3), ConfigError);
}

TEST(PartitionTest, TooFewSessionsListsUsers) {
  const auto recs = corpus(2, 4, 30, 8);
  try {
    partition_sessions(recs, SessionRoles{}, 10);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("0, 1"), std::string::npos);
  }
}

TEST(SynthTest, SameSeedSameCorpus) {
  const auto a = corpus(3, 2, 40, 9), b = corpus(3, 2, 40, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].samples, b[i].samples);
  EXPECT_NE(a[0].samples, corpus(3, 2, 40, 10)[0].samples);
}

TEST(SynthTest, DistinctSessionIdsPerUser) {
  const auto recs = corpus(3, 5, 20, 9);
  std::set<std::pair<int, int>> keys;
  for (const auto& r : recs) keys.insert({r.user_id, r.session_id});
  EXPECT_EQ(keys.size(), recs.size());
}

// Magnitude spectrum by direct DFT, channel by channel.
std::vector<double> spectrum(const SessionRecording& rec) {
  const std::size_t n = rec.length();
  std::vector<double> out;
  for (std::size_t c = 0; c < rec.channels(); ++c) {
    for (std::size_t k = 0; k <= n / 2; ++k) {
      std::complex<double> acc;
      for (std::size_t t = 0; t < n; ++t) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * t) /
                             static_cast<double>(n);
        acc += rec.samples.at(t, c) * std::polar(1.0, angle);
      }
      out.push_back(std::abs(acc));
    }
  }
  return out;
}

TEST(SynthTest, NoiselessUsersSeparableByNearestSpectrum) {
  SynthParams p;
  p.n_users = 2;
  p.sessions_per_user = 6;
  p.session_length = 128;
  p.channels = 2;
  p.components = 1;
  p.noise_std = 0.0;
  // Disjoint frequency bands: redraw until the two users are well apart.
  std::vector<SessionRecording> recs;
  for (std::uint64_t seed = 0;; ++seed) {
    Rng rng = make_rng(seed, 0xc0);
    recs = synth_generate(p, rng);
    const auto a = spectrum(recs[0]), b = spectrum(recs[p.sessions_per_user]);
    const auto peak = [](const std::vector<double>& s) {
      return std::max_element(s.begin(), s.begin() + 65) - s.begin();
    };
    if (std::abs(peak(a) - peak(b)) >= 8) break;
  }
  std::vector<std::vector<double>> spectra;
  for (const auto& r : recs) spectra.push_back(spectrum(r));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    double best = INFINITY;
    int label = -1;
    for (std::size_t j = 0; j < recs.size(); ++j) {
      if (j == i) continue;
      double d = 0.0;
      for (std::size_t k = 0; k < spectra[i].size(); ++k) {
        d += (spectra[i][k] - spectra[j][k]) * (spectra[i][k] - spectra[j][k]);
      }
      if (d < best) best = d, label = recs[j].user_id;
    }
    correct += label == recs[i].user_id;
  }
  EXPECT_EQ(correct, recs.size());
}

TEST(SynthTest, OffsetShiftsEverySample) {
  SynthParams p;
  p.n_users = 2;
  p.sessions_per_user = 1;
  Rng a = make_rng(3, 0), b = make_rng(3, 0);
  const auto base = synth_generate(p, a);
  p.offset = 8.0;
  const auto moved = synth_generate(p, b);
  for (std::size_t i = 0; i < base[0].samples.size(); ++i) {
    EXPECT_DOUBLE_EQ(moved[0].samples[i], base[0].samples[i] + 8.0);
  }
}

TEST(SynthTest, ZeroCountsRejected) {
  Rng rng = make_rng(0, 0);
  EXPECT_THROW(synth_generate(0, 1, 1, 1, rng), ConfigError);
}

TEST(CorpusIoTest, CsvTwoRowsOneSession) {
  std::istringstream in("user_id,session_id,c0,c1\n3,1,0.5,-1\n3,1,2,4e-1\n");
  const auto recs = read_csv_corpus(in, "mem.csv");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].user_id, 3);
  EXPECT_EQ(recs[0].length(), 2u);
  EXPECT_EQ(recs[0].samples, Tensor({2, 2}, std::vector<double>{0.5, -1, 2, 0.4}));
}

TEST(CorpusIoTest, MissingColumnNamed) {
  std::istringstream in("user_id,c0,c1\n1,2,3\n");
  try {
    read_csv_corpus(in, "bad.csv");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("'session_id'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bad.csv:1"), std::string::npos);
  }
}

TEST(CorpusIoTest, MalformedRowReportsLine) {
  std::istringstream in("user_id,session_id,c0\n1,1,0.5\n1,1,oops\n");
  try {
    read_csv_corpus(in, "rows.csv");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("rows.csv:3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'c0'"), std::string::npos);
  }
  std::istringstream ragged("user_id,session_id,c0,c1\n1,1,0.5\n");
  EXPECT_THROW(read_csv_corpus(ragged, "r.csv"), DataError);
}

TEST(CorpusIoTest, CsvRoundTripExact) {
  const auto recs = corpus(1, 1, 12, 12);
  std::stringstream buf;
  write_csv_session(buf, recs[0]);
  const auto back = read_csv_corpus(buf, "rt.csv");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].samples, recs[0].samples);
}

TEST(CorpusIoTest, StsdRoundTripBitwise) {
  auto recs = corpus(2, 2, 15, 13);
  // The payload is f32; values representable in float survive bitwise.
  for (auto& r : recs) {
    for (double& v : r.samples.data()) v = static_cast<float>(v);
  }
  std::stringstream buf;
  write_stsd(buf, recs);
  const auto back = read_stsd(buf);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].user_id, recs[i].user_id);
    EXPECT_EQ(back[i].session_id, recs[i].session_id);
    EXPECT_EQ(back[i].samples, recs[i].samples);
  }
}

TEST(CorpusIoTest, StsdLayout) {
  SessionRecording r;
  r.user_id = 7;
  r.session_id = 2;
  r.samples = Tensor({1, 1}, std::vector<double>{1.0});
  std::stringstream buf;
  write_stsd(buf, {r});
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 4u + 4 + 4 + 16 + 4);
  EXPECT_EQ(bytes.substr(0, 4), "STSD");
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 7u);  // little-endian u32
  EXPECT_EQ(static_cast<unsigned char>(bytes[16]), 2u);
  EXPECT_EQ(bytes.substr(28), std::string("\x00\x00\x80\x3f", 4));
}

TEST(CorpusIoTest, ForeignAndTruncatedStsd) {
  std::istringstream foreign("NOPE0000");
  EXPECT_THROW(read_stsd(foreign), DataError);
  const auto recs = corpus(1, 1, 5, 14);
  std::stringstream buf;
  write_stsd(buf, recs);
  std::istringstream cut(buf.str().substr(0, buf.str().size() - 3));
  EXPECT_THROW(read_stsd(cut), DataError);
}

TEST(CorpusIoTest, InconsistentChannelsRejected) {
  auto recs = corpus(1, 2, 5, 15);
  recs[1].samples = Tensor({5, 4}, 0.0);
  std::stringstream buf;
  write_stsd(buf, recs);
  EXPECT_THROW(read_stsd(buf), DataError);
}

TEST(ProfileTest, PublishedShapes) {
  const DatasetProfile m = musicid_profile();
  EXPECT_EQ(m.steps, 30u);
  EXPECT_EQ(m.channels, 24u);
  EXPECT_EQ(m.pretrain_epochs, 30);
  EXPECT_EQ(m.filters, (std::vector<std::size_t>{128, 256}));
  const DatasetProfile e = mmi_profile();
  EXPECT_EQ(e.steps, 128u);
  EXPECT_EQ(e.channels, 40u);
  EXPECT_EQ(e.pretrain_epochs, 10);
  EXPECT_EQ(e.filters, (std::vector<std::size_t>{48, 96}));
  EXPECT_EQ(profile_by_name("synth").name, synth_profile().name);
  EXPECT_THROW(profile_by_name("nope"), ConfigError);
}

}  // namespace
}  // namespace siamts::data
