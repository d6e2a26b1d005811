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


#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "siamts/cli/commands.h"
#include "siamts/cli/files.h"
#include "siamts/cli/run_config.h"
#include "siamts/common/error.h"
#include "siamts/data/corpus_io.h"

namespace siamts::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("siamts_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_config(const std::string& name, const Json& j) const {
    write_file_atomic(path(name), j.dump());
    return path(name);
  }

  int cli(std::vector<std::string> args) const {
    args.insert(args.begin(), "siamts");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
  }

  fs::path dir_;
};

Json tiny_experiment() {
  return {{"steps", 20},
          {"extractor", {{"filters", {8, 8}}}},
          {"simsiam",
           {{"projector", {{"widths", {16, 16}}}},
            {"predictor", {{"widths", {8, 16}}}},
            {"collapse_probe", 16}}},
          {"pretrain", {{"max_epochs", 2}, {"initial_lr", 0.001}}},
          {"classifier", {{"max_epochs", 2}}},
          {"probe_samples_per_user", 4}};
}

Json tiny_corpus() {
  return {{"synth",
           {{"n_users", 6},
            {"sessions_per_user", 6},
            {"session_length", 60},
            {"channels", 3}}}};
}

TEST_F(CliTest, SynthIsDeterministicWithManifest) {
  ASSERT_EQ(cli({"synth", "--out", path("a"), "--seed", "5"}), kExitOk);
  ASSERT_EQ(cli({"synth", "--out", path("b"), "--seed", "5"}), kExitOk);
  const std::string a = read_text_file(path("a/corpus.stsd"));
  EXPECT_EQ(a, read_text_file(path("b/corpus.stsd")));
  ASSERT_EQ(cli({"synth", "--out", path("c"), "--seed", "6"}), kExitOk);
  EXPECT_NE(a, read_text_file(path("c/corpus.stsd")));

  const auto recs = data::load_corpus(path("a/corpus.stsd"));
  EXPECT_EQ(recs.size(), 80u);
  const Json manifest = Json::parse(read_text_file(path("a/manifest.json")));
  EXPECT_EQ(manifest["n_sessions"], 80);
  std::vector<int> users;
  for (const Json& u : manifest["users"]) {
    users.push_back(u["user_id"].get<int>());
    EXPECT_EQ(u["sessions"].size(), 8u);
  }
  EXPECT_EQ(users, data::user_ids(recs));
  EXPECT_EQ(manifest["config"]["seed"], 5);
}

TEST_F(CliTest, RunWritesReportAndCurve) {
  const Json cfg = {{"corpus", tiny_corpus()},
                    {"scenario", 2},
                    {"methods", {"simsiam", "supervised"}},
                    {"fractions", {0.1, 0.2, 0.4, 0.7, 1.0}},
                    {"experiment", tiny_experiment()},
                    {"runs", 1}};
  const std::string file = write_config("run.json", cfg);
  ASSERT_EQ(cli({"run", "--config", file, "--out", path("r1"), "--seed", "3"}),
            kExitOk);
  std::istringstream curve(read_text_file(path("r1/curve.csv")));
  std::string line;
  std::getline(curve, line);
  EXPECT_EQ(line, "fraction,method,mean_kappa,std");
  int rows = 0;
  while (std::getline(curve, line)) ++rows;
  EXPECT_EQ(rows, 10);

  const Json report = Json::parse(read_text_file(path("r1/report.json")));
  EXPECT_EQ(report["rows"].size(), 10u);
  EXPECT_EQ(report["config"]["seed"], 3);
  EXPECT_EQ(report["config"]["experiment"]["steps"], 20);
  // The embedded config reproduces the report on its own.
  const std::string again = write_config("again.json", report["config"]);
  ASSERT_EQ(cli({"run", "--config", again, "--out", path("r2")}), kExitOk);
  const Json second = Json::parse(read_text_file(path("r2/report.json")));
  EXPECT_EQ(second["rows"], report["rows"]);
  EXPECT_EQ(second["aggregates"], report["aggregates"]);
}

TEST_F(CliTest, TransferOutsideScenarioOneIsConfigError) {
  const Json cfg = {{"scenario", 2}, {"method", "transfer"}};
  EXPECT_EQ(cli({"run", "--config", write_config("t.json", cfg)}),
            kExitConfigError);
  try {
    run_config_from_json(cfg);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("scenario 1"), std::string::npos);
  }
}

TEST_F(CliTest, ExitCodesByErrorKind) {
  EXPECT_EQ(cli({"run", "--config", write_config("bad.json", {{"bogus", 1}})}),
            kExitConfigError);
  EXPECT_EQ(cli({"run", "--config", path("missing.json")}), kExitConfigError);
  EXPECT_EQ(cli({"run", "--profile", "imagenet"}), kExitConfigError);
  EXPECT_EQ(cli({"run", "--runs", "0"}), kExitConfigError);
  EXPECT_EQ(cli({"frobnicate"}), kExitConfigError);
  const Json corpus = {{"corpus", {{"path", path("nope.stsd")}}}};
  EXPECT_EQ(cli({"run", "--config", write_config("c.json", corpus)}),
            kExitDataError);
  std::ofstream(path("broken.csv")) << "user_id,c0\n1,2\n";
  const Json csv = {{"corpus", {{"path", path("broken.csv")}}}};
  EXPECT_EQ(cli({"run", "--config", write_config("d.json", csv)}),
            kExitDataError);
  std::ostringstream sink;
  EXPECT_EQ(cmd_gradcheck(sink, 0.01), kExitNumericError);
}

TEST_F(CliTest, GradcheckReportsEveryOp) {
  std::ostringstream out;
  EXPECT_EQ(cmd_gradcheck(out), kExitOk);
  const std::string text = out.str();
  for (const char* op : {"conv1d", "matmul", "relu", "cosine_similarity",
                         "standardize", "simsiam_loss"}) {
    EXPECT_NE(text.find(op), std::string::npos) << op;
  }
  EXPECT_EQ(cli({"gradcheck"}), kExitOk);
}

TEST_F(CliTest, SweepWritesOneRowPerCandidate) {
  const Json cfg = {{"corpus", tiny_corpus()},
                    {"variable", "weight_decay"},
                    {"candidates", {0.1, 0.01, 0.001, 0.0001, 0.00001}},
                    {"settings", {"Ex1"}},
                    {"runs_per_point", 1},
                    {"experiment", tiny_experiment()}};
  ASSERT_EQ(cli({"sweep", "--config", write_config("s.json", cfg), "--out",
                 path("s")}),
            kExitOk);
  std::istringstream csv(read_text_file(path("s/sweep.csv")));
  std::string line;
  std::vector<std::string> rows;
  std::getline(csv, line);
  while (std::getline(csv, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 5u);
  const Json doc = Json::parse(read_text_file(path("s/sweep.json")));
  EXPECT_EQ(doc["config"]["variable"], "weight_decay");

  Json empty = cfg;
  empty["candidates"] = Json::array();
  EXPECT_EQ(cli({"sweep", "--config", write_config("e.json", empty)}),
            kExitConfigError);
  EXPECT_EQ(cli({"sweep"}), kExitConfigError);
}

TEST(RunConfigTest, OverridesAndRoundTrip) {
  Overrides o;
  o.runs = 3;
  o.seed = 11;
  o.out_dir = "elsewhere";
  const RunConfig cfg = run_config_from_json(Json{{"runs", 7}}, o);
  EXPECT_EQ(cfg.runs, 3);
  EXPECT_EQ(cfg.seed, 11u);
  EXPECT_EQ(cfg.out_dir, "elsewhere");
  EXPECT_EQ(to_json(run_config_from_json(to_json(cfg))), to_json(cfg));
  EXPECT_THROW(run_config_from_json(Json{{"fractions", {0.0, 0.5}}}), ConfigError);
}

TEST(FilesTest, AtomicWriteLeavesNoTemporary) {
  const fs::path dir = fs::temp_directory_path() / "siamts_files_test";
  fs::remove_all(dir);
  write_file_atomic(dir / "x.txt", "hello");
  EXPECT_EQ(read_text_file(dir / "x.txt"), "hello");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  EXPECT_EQ(entries, 1u);
  fs::remove_all(dir);
  EXPECT_THROW(read_text_file(dir / "x.txt"), ConfigError);
}

}  // namespace
}  // namespace siamts::cli
