// Copyright (c) 2026 The Frame Scraper Authors. All Rights Reserved.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library through its public header only.

#include "scraper/scraper.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "scraper_capi_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string str(const std::string& sub = "") const { return (sub.empty() ? path_ : path_ / sub).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

scraper_manifest manifest(uint32_t envs) { return {SCRAPER_GAME_MS_PACMAN, envs, "ppo2", 0, 0}; }

TEST(CApiWriter, WritesRowsAndFrames) {
  TempDir dir;
  scraper_writer* w = nullptr;
  const scraper_manifest m = manifest(2);
  ASSERT_EQ(scraper_writer_open(dir.str().c_str(), &m, &w), SCRAPER_OK);
  std::vector<uint8_t> frame(160 * 210 * 3, 0);
  for (uint32_t env = 0; env < 2; ++env) {
    char path[256];
    ASSERT_EQ(scraper_writer_save_frame(w, env, 0, frame.data(), 160, 210, path, sizeof path), SCRAPER_OK);
    EXPECT_EQ(std::string(path), "frames/e0" + std::to_string(env) + "_s00000000.png");
    scraper_step s{0, env, 1, "UP", 0.0, env == 0 ? "10" : nullptr, 3, 0, path};
    ASSERT_EQ(scraper_writer_append(w, &s), SCRAPER_OK) << scraper_last_error();
  }
  ASSERT_EQ(scraper_writer_close(w), SCRAPER_OK);
  scraper_writer_free(w);
  EXPECT_EQ(slurp(dir.str("steps.csv")),
            "step,env,action,action_name,reward,lives,done,frame\n"
            "0,0,1,UP,10,3,0,frames/e00_s00000000.png\n"
            "0,1,1,UP,0,3,0,frames/e01_s00000000.png\n");
  scraper_report* r = nullptr;
  ASSERT_EQ(scraper_validate(dir.str().c_str(), &r), SCRAPER_OK);
  EXPECT_EQ(scraper_report_size(r), 0u);
  scraper_report_free(r);
}

TEST(CApiWriter, DoubleRewardsUseShortestDecimal) {
  TempDir dir;
  scraper_writer* w = nullptr;
  const scraper_manifest m = manifest(1);
  ASSERT_EQ(scraper_writer_open(dir.str().c_str(), &m, &w), SCRAPER_OK);
  scraper_step s{0, 0, 0, "NOOP", 0.1, nullptr, 3, 1, nullptr};
  ASSERT_EQ(scraper_writer_append(w, &s), SCRAPER_OK);
  scraper_writer_free(w);  // closes
  EXPECT_NE(slurp(dir.str("steps.csv")).find("0,0,0,NOOP,0.1,3,1,\n"), std::string::npos);
}

TEST(CApiWriter, ErrorsMapToStatuses) {
  TempDir dir;
  scraper_writer* w = nullptr;
  const scraper_manifest m = manifest(4);
  ASSERT_EQ(scraper_writer_open(dir.str().c_str(), &m, &w), SCRAPER_OK);
  scraper_step s{7, 0, 0, nullptr, 0, nullptr, 3, 0, nullptr};
  ASSERT_EQ(scraper_writer_append(w, &s), SCRAPER_OK);
  s.step = 5;
  EXPECT_EQ(scraper_writer_append(w, &s), SCRAPER_E_ORDERING);
  EXPECT_NE(std::strlen(scraper_last_error()), 0u);
  s.step = 8;
  s.env = 4;
  EXPECT_EQ(scraper_writer_append(w, &s), SCRAPER_E_SCHEMA);
  s.env = 0;
  s.reward_text = "abc";
  EXPECT_EQ(scraper_writer_append(w, &s), SCRAPER_E_PARSE);
  EXPECT_EQ(scraper_writer_append(w, nullptr), SCRAPER_E_INVALID_ARGUMENT);
  s.reward_text = nullptr;
  EXPECT_EQ(scraper_writer_append(w, &s), SCRAPER_OK);
  EXPECT_STREQ(scraper_last_error(), "");
  scraper_writer_free(w);

  const scraper_manifest zero = manifest(0);
  EXPECT_EQ(scraper_writer_open(dir.str("z").c_str(), &zero, &w), SCRAPER_E_SCHEMA);
  EXPECT_EQ(w, nullptr);
}

TEST(CApiWriter, SmallPathBufferIsRejected) {
  TempDir dir;
  scraper_writer* w = nullptr;
  const scraper_manifest m = manifest(1);
  ASSERT_EQ(scraper_writer_open(dir.str().c_str(), &m, &w), SCRAPER_OK);
  std::vector<uint8_t> frame(160 * 210 * 3, 0);
  char small[4];
  EXPECT_EQ(scraper_writer_save_frame(w, 0, 0, frame.data(), 160, 210, small, sizeof small),
            SCRAPER_E_INVALID_ARGUMENT);
  scraper_writer_free(w);
}

TEST(CApi, LastErrorIsPerThread) {
  scraper_report* r = nullptr;
  EXPECT_EQ(scraper_validate("/nonexistent/run", &r), SCRAPER_E_IO);
  const std::string mine = scraper_last_error();
  std::string theirs = "unset";
  std::thread([&] { theirs = scraper_last_error(); }).join();
  EXPECT_FALSE(mine.empty());
  EXPECT_EQ(theirs, "");
}

TEST(CApi, StatusStrings) {
  for (int s = SCRAPER_OK; s <= SCRAPER_E_INTERNAL; ++s)
    EXPECT_STRNE(scraper_status_string(static_cast<scraper_status>(s)), "unknown status");
}

TEST(CApi, SynthExpandSummarizePlot) {
  TempDir dir;
  ASSERT_EQ(scraper_synth("mspacman-4env", dir.str().c_str()), SCRAPER_OK);
  scraper_expand_options opts{nullptr, nullptr, 4, 0};
  scraper_expand_result res{};
  scraper_report* r = nullptr;
  ASSERT_EQ(scraper_expand(dir.str().c_str(), &opts, &res, &r), SCRAPER_OK) << scraper_last_error();
  EXPECT_EQ(res.refused, 0);
  EXPECT_EQ(res.outputs, 4u);
  EXPECT_EQ(scraper_report_has_blocking(r), 0);
  ASSERT_GT(scraper_report_size(r), 0u);
  EXPECT_EQ(scraper_report_level(r, 0), SCRAPER_LEVEL_WARN);
  EXPECT_EQ(std::string(scraper_report_line(r, 0)).rfind("WARN env=0", 0), 0u);
  EXPECT_EQ(scraper_report_line(r, 999), nullptr);
  scraper_report_free(r);
  EXPECT_EQ(slurp(dir.str("enriched_env1.csv")), slurp(dir.str("expected_enriched_env1.csv")));

  scraper_table* t = nullptr;
  ASSERT_EQ(scraper_table_open(dir.str("enriched_env1.csv").c_str(), &t), SCRAPER_OK);
  EXPECT_EQ(scraper_table_game(t), SCRAPER_GAME_MS_PACMAN);
  scraper_summary* s = nullptr;
  ASSERT_EQ(scraper_summarize(t, nullptr, &s), SCRAPER_OK);
  ASSERT_EQ(scraper_summary_size(s), 4u);  // three complete plus the unfinished tail
  scraper_game_row row{};
  ASSERT_EQ(scraper_summary_row(s, 3, &row), SCRAPER_OK);
  EXPECT_EQ(row.complete, 0);
  EXPECT_EQ(row.game_number, 4u);
  EXPECT_EQ(scraper_summary_row(s, 4, &row), SCRAPER_E_INVALID_ARGUMENT);
  scraper_summary_free(s);

  const scraper_summary_options ext{1, 1, 1};
  ASSERT_EQ(scraper_summarize(t, &ext, &s), SCRAPER_OK);
  ASSERT_EQ(scraper_summary_size(s), 2u);
  ASSERT_EQ(scraper_summary_row(s, 0, &row), SCRAPER_OK);
  EXPECT_STREQ(row.rank, "best");
  scraper_summary_free(s);

  char* json = nullptr;
  char* svg = nullptr;
  ASSERT_EQ(scraper_plot(t, "game-summary", 3, &json, &svg), SCRAPER_OK);
  EXPECT_NE(std::string(json).find("\"kind\": \"game_summary\""), std::string::npos);
  EXPECT_EQ(std::string(svg).rfind("<svg", 0), 0u);
  scraper_string_free(json);
  scraper_string_free(svg);
  EXPECT_EQ(scraper_plot(t, "miss-distance", 3, &json, nullptr), SCRAPER_E_INCOMPATIBLE);
  EXPECT_EQ(scraper_plot(t, "histogram", 3, &json, nullptr), SCRAPER_E_INVALID_ARGUMENT);
  EXPECT_EQ(json, nullptr);
  scraper_table_free(t);
}

TEST(CApi, ExpandRefusalIsReportedNotFailed) {
  TempDir dir;
  ASSERT_EQ(scraper_synth("mspacman-3game", dir.str().c_str()), SCRAPER_OK);
  fs::remove(dir.str("frames/e00_s00000003.png"));
  scraper_expand_result res{};
  scraper_report* r = nullptr;
  ASSERT_EQ(scraper_expand(dir.str().c_str(), nullptr, &res, &r), SCRAPER_OK);
  EXPECT_EQ(res.refused, 1);
  EXPECT_EQ(scraper_report_has_blocking(r), 1);
  EXPECT_EQ(scraper_report_level(r, 0), SCRAPER_LEVEL_ERROR);
  scraper_report_free(r);
}

TEST(CApi, ExpandWithMissingProfileIsIo) {
  TempDir dir;
  ASSERT_EQ(scraper_synth("pong", dir.str().c_str()), SCRAPER_OK);
  scraper_expand_options opts{nullptr, "/nonexistent/profile.json", 1, 0};
  scraper_report* r = nullptr;
  EXPECT_EQ(scraper_expand(dir.str().c_str(), &opts, nullptr, &r), SCRAPER_E_IO);
  EXPECT_EQ(r, nullptr);
}

TEST(CApi, SynthScenarios) {
  ASSERT_GT(scraper_synth_scenario_count(), 0u);
  for (size_t i = 0; i < scraper_synth_scenario_count(); ++i) EXPECT_NE(scraper_synth_scenario_name(i), nullptr);
  EXPECT_EQ(scraper_synth_scenario_name(scraper_synth_scenario_count()), nullptr);
  TempDir dir;
  EXPECT_EQ(scraper_synth("nope", dir.str().c_str()), SCRAPER_E_INVALID_ARGUMENT);
}

TEST(CApi, CalibrateColor) {
  std::vector<uint8_t> px = {250, 10, 128, 0, 0, 0};
  uint8_t range[6];
  ASSERT_EQ(scraper_calibrate_color(px.data(), 2, 1, 0, 0, 10, range), SCRAPER_OK);
  EXPECT_EQ(std::vector<uint8_t>(range, range + 6), (std::vector<uint8_t>{240, 255, 0, 20, 118, 138}));
  EXPECT_EQ(scraper_calibrate_color(px.data(), 2, 1, 2, 0, 10, range), SCRAPER_E_GEOMETRY);
}

TEST(CApi, MalformedTableNamesLine) {
  TempDir dir;
  {
    std::ofstream(dir.str("bad.csv")) << "step,env\n";
  }
  scraper_table* t = nullptr;
  EXPECT_EQ(scraper_table_open(dir.str("bad.csv").c_str(), &t), SCRAPER_E_PARSE);
  EXPECT_NE(std::string(scraper_last_error()).find("line 1"), std::string::npos) << scraper_last_error();
  EXPECT_EQ(scraper_table_open(dir.str("missing.csv").c_str(), &t), SCRAPER_E_IO);
}

}  // namespace
