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

#include "summary.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "../../vendor/json.hpp"
#include "error.hpp"
#include "synth.hpp"
#include "test_util.hpp"

namespace scraper {
namespace {

using testing::TempDir;

EpisodeSummary game(std::uint32_t env, std::uint32_t number, std::int64_t reward, std::uint64_t end_step,
                    bool complete = true) {
  EpisodeSummary s;
  s.env = env;
  s.game_number = number;
  s.total_game_reward = Points::whole(reward);
  s.end_step = end_step;
  s.complete = complete;
  return s;
}

std::vector<std::int64_t> rewards(const std::vector<EpisodeSummary>& games) {
  std::vector<std::int64_t> out;
  for (const auto& g : games) out.push_back(g.total_game_reward.units() / Points::kScale);
  return out;
}

TEST(SummarizeGames, ScriptedSingleGameExactFields) {
  auto script = synth::mspacman_script({.games_per_env = {1}, .steps_per_life = 104, .cross_pills = false});
  for (auto& s : script.steps) s.reward = Points();
  for (std::size_t i = 0; i < 24; ++i) script.steps[i * 13].reward = Points::whole(10);
  TempDir dir;
  synth::script_episode(script, dir.path(), mspacman_profile());
  ASSERT_FALSE(expand(dir.path(), {}).refused);
  const auto table = read_enriched_csv(dir / enriched_file_name(0));
  const auto games = summarize_games(table.records);
  ASSERT_EQ(games.size(), 1u);
  EXPECT_EQ(games[0].total_game_reward, Points::whole(240));
  EXPECT_EQ(games[0].total_game_steps, 312u);
  EXPECT_EQ(games[0].lives_used, 3u);
  EXPECT_EQ(games[0].end_step, 311u);
  EXPECT_TRUE(games[0].complete);
  ASSERT_EQ(games[0].per_life.size(), 3u);
  Points sum;
  for (const auto& l : games[0].per_life) {
    EXPECT_EQ(l.life_steps, 104u);
    sum += l.life_reward;
  }
  EXPECT_EQ(sum, Points::whole(240));
}

TEST(SummarizeGames, MissingEndOfGameIsIncomplete) {
  const auto script = synth::mspacman_script({.games_per_env = {0}, .truncated_tail = 9});
  const auto rows = synth::expected_enrichment(script, 0, mspacman_profile());
  const auto games = summarize_games(rows);
  ASSERT_EQ(games.size(), 1u);
  EXPECT_FALSE(games[0].complete);
  EXPECT_EQ(games[0].total_game_steps, 9u);
}

TEST(SummarizeGames, EmptyStream) { EXPECT_TRUE(summarize_games({}).empty()); }

TEST(SummarizeGames, MultiEnvGroupsByEnvAndGame) {
  const auto script = *synth::scenario("mspacman-4env");
  std::vector<EnrichedRecord> all;
  for (std::uint32_t e = 0; e < 4; ++e) {
    auto rows = synth::expected_enrichment(script, e, mspacman_profile());
    all.insert(all.end(), rows.begin(), rows.end());
  }
  const auto games = summarize_games(all);
  // games_per_env {2,3,1,2} plus one unfinished game each.
  EXPECT_EQ(games.size(), 12u);
  EXPECT_EQ(std::count_if(games.begin(), games.end(), [](const auto& g) { return g.complete; }), 8);
}

TEST(SelectExtremes, TiesBrokenByEarlierEnd) {
  const std::vector<EpisodeSummary> games = {game(0, 1, 10, 100), game(0, 2, 50, 200), game(0, 3, 30, 300),
                                             game(0, 4, 50, 150)};
  const Extremes ex = select_extremes(games, 2);
  ASSERT_EQ(ex.best.size(), 2u);
  EXPECT_EQ(ex.best[0].game_number, 4u);
  EXPECT_EQ(ex.best[1].game_number, 2u);
  EXPECT_EQ(rewards(ex.worst), (std::vector<std::int64_t>{10, 30}));
}

TEST(SelectExtremes, FewerGamesThanK) {
  const std::vector<EpisodeSummary> games = {game(0, 1, 10, 100), game(0, 2, 20, 200), game(0, 3, 99, 300, false)};
  const Extremes ex = select_extremes(games, 3);
  EXPECT_EQ(ex.best.size(), 2u);
  EXPECT_EQ(ex.worst.size(), 2u);
}

// Oracle: full sort of complete games by (reward desc, end_step, env).
TEST(SelectExtremes, MatchesFullSortOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<EpisodeSummary> games;
    const int n = static_cast<int>(rng() % 15);
    for (int i = 0; i < n; ++i)
      games.push_back(game(rng() % 3, i + 1, static_cast<std::int64_t>(rng() % 6) * 10, rng() % 50, rng() % 5 != 0));
    const std::size_t k = 1 + rng() % 5;
    std::vector<EpisodeSummary> sorted;
    for (const auto& g : games)
      if (g.complete) sorted.push_back(g);
    auto key = [](const EpisodeSummary& g) { return std::make_tuple(-g.total_game_reward.units(), g.end_step, g.env); };
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    const std::size_t take = std::min(k, sorted.size());
    std::vector<EpisodeSummary> best(sorted.begin(), sorted.begin() + take);
    std::vector<EpisodeSummary> worst(sorted.end() - take, sorted.end());
    auto asc = [](const EpisodeSummary& g) { return std::make_tuple(g.total_game_reward.units(), g.end_step, g.env); };
    std::sort(worst.begin(), worst.end(), [&](const auto& a, const auto& b) { return asc(a) < asc(b); });
    const Extremes ex = select_extremes(games, k);
    auto ids = [](const std::vector<EpisodeSummary>& v) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
      for (const auto& g : v) out.push_back({g.env, g.game_number});
      return out;
    };
    EXPECT_EQ(ids(ex.best), ids(best));
    EXPECT_EQ(ids(ex.worst), ids(worst));
  }
}

EnrichedTable table_of(const synth::EpisodeScript& script) {
  EnrichedTable t;
  t.game = script.game;
  for (std::uint32_t e = 0; e < script.num_envs; ++e) {
    auto rows = synth::expected_enrichment(script, e, builtin_profile(script.game));
    t.records.insert(t.records.end(), rows.begin(), rows.end());
  }
  return t;
}

TEST(PlotData, PerEnvQualityHasOneSeriesPerEnv) {
  const auto ds = emit_plot_data(table_of(*synth::scenario("mspacman-4env")), PlotKind::kPerEnvQuality);
  ASSERT_EQ(ds.series.size(), 4u);
  const std::vector<std::size_t> complete = {2, 3, 1, 2};
  for (std::size_t e = 0; e < 4; ++e) {
    EXPECT_EQ(ds.series[e].name, "env " + std::to_string(e));
    EXPECT_EQ(ds.series[e].points.size(), complete[e]);
  }
}

TEST(PlotData, MissDistanceOnePointPerMiss) {
  const auto script = synth::pong_script({});
  const auto t = table_of(script);
  const auto ds = emit_plot_data(t, PlotKind::kMissDistance);
  ASSERT_EQ(ds.series.size(), 1u);
  std::vector<std::pair<double, double>> want;
  for (std::size_t i = 0; i < script.steps.size(); ++i)
    if (script.steps[i].miss) want.emplace_back(static_cast<double>(script.step_index[i]), *script.steps[i].miss_distance);
  ASSERT_EQ(ds.series[0].points.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(ds.series[0].points[i].first, want[i].first);
    EXPECT_NEAR(ds.series[0].points[i].second, want[i].second, 1e-9);
  }
}

TEST(PlotData, EmptyGameSummaryHasOneEmptySeries) {
  const auto ds = emit_plot_data(EnrichedTable{}, PlotKind::kGameSummary);
  ASSERT_EQ(ds.series.size(), 1u);
  EXPECT_TRUE(ds.series[0].points.empty());
}

TEST(PlotData, GameSummaryFollowsScriptedTotals) {
  const auto script = *synth::scenario("mspacman-3game");
  const auto ds = emit_plot_data(table_of(script), PlotKind::kGameSummary);
  std::vector<Points> totals(3);
  for (const auto& s : script.steps) totals[s.game_number - 1] += s.reward;
  ASSERT_EQ(ds.series[0].points.size(), 3u);
  for (std::size_t g = 0; g < 3; ++g) {
    EXPECT_EQ(ds.series[0].points[g].first, static_cast<double>(g + 1));
    EXPECT_EQ(ds.series[0].points[g].second, totals[g].to_double());
  }
}

TEST(PlotData, BestWorstSeriesPerGame) {
  const auto ds = emit_plot_data(table_of(*synth::scenario("mspacman-4env")), PlotKind::kBestWorst, {.k = 3});
  ASSERT_EQ(ds.series.size(), 6u);
  for (const auto& s : ds.series) EXPECT_EQ(s.points.size(), 3u);  // three lives each
  EXPECT_EQ(ds.series[0].name.rfind("best 1", 0), 0u);
  EXPECT_EQ(ds.series[3].name.rfind("worst 1", 0), 0u);
}

TEST(PlotData, IncompatibleKinds) {
  const auto pacman = table_of(*synth::scenario("mspacman-3game"));
  for (PlotKind k : {PlotKind::kMissDistance, PlotKind::kScoreCurve, PlotKind::kPerEnvQuality}) {
    try {
      emit_plot_data(pacman, k);
      ADD_FAILURE() << to_string(k);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIncompatible);
    }
  }
}

TEST(PlotData, KindNames) {
  for (const char* name : {"game-summary", "per-env-quality", "best-worst", "miss-distance", "score-curve"}) {
    const auto k = parse_plot_kind(name);
    ASSERT_TRUE(k) << name;
    EXPECT_EQ(cli_name(*k), name);
  }
  EXPECT_FALSE(parse_plot_kind("game_summary"));
}

TEST(PlotData, JsonShapeAndSvg) {
  const auto ds = emit_plot_data(table_of(synth::pong_script({})), PlotKind::kScoreCurve);
  const auto j = nlohmann::json::parse(plot_to_json(ds));
  EXPECT_EQ(j["kind"], "score_curve");
  ASSERT_EQ(j["series"].size(), 1u);
  EXPECT_EQ(j["series"][0]["points"].size(), 2u);
  EXPECT_EQ(j["series"][0]["points"][0][1], -3.0);  // 2 agent points, 5 opponent points
  const std::string svg = render_svg(ds);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace scraper
