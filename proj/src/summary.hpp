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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enrichment.hpp"

namespace scraper {

struct LifeSummary {
  std::uint32_t life_number = 1;
  Points life_reward;
  std::uint64_t life_steps = 0;
  friend bool operator==(const LifeSummary&, const LifeSummary&) = default;
};

struct EpisodeSummary {
  std::uint32_t env = 0;
  std::uint32_t game_number = 1;
  Points total_game_reward;
  std::uint64_t total_game_steps = 0;
  std::uint32_t lives_used = 0;
  std::uint64_t end_step = 0;
  std::vector<LifeSummary> per_life;
  bool complete = false;
  friend bool operator==(const EpisodeSummary&, const EpisodeSummary&) = default;
};

// One summary per (env, game_number), sorted by env then game.
std::vector<EpisodeSummary> summarize_games(std::span<const EnrichedRecord> records);

struct Extremes {
  std::vector<EpisodeSummary> best;   // highest reward first
  std::vector<EpisodeSummary> worst;  // lowest reward first
};

// Complete games only. Games are ranked by reward, ties by earlier end_step
// (then env); `best` is the head of that ranking and `worst` its tail, so the
// two never share a game while 2k <= complete games. Each list is ordered
// by reward (desc/asc) with ties by earlier end_step.
Extremes select_extremes(std::span<const EpisodeSummary> summaries, std::size_t k);

enum class PlotKind { kGameSummary, kPerEnvQuality, kBestWorst, kMissDistance, kScoreCurve };

// Hyphenated CLI names: game-summary, per-env-quality, best-worst,
// miss-distance, score-curve.
std::optional<PlotKind> parse_plot_kind(std::string_view name);
std::string_view cli_name(PlotKind kind);
std::string_view to_string(PlotKind kind);  // game_summary, ...

struct Series {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

struct PlotDataset {
  PlotKind kind = PlotKind::kGameSummary;
  std::vector<Series> series;
};

struct PlotOptions {
  std::size_t k = 3;
};

// Throws kIncompatible when the kind does not fit the input (Pong-only kinds on
// Ms. Pacman data, per-env quality on a single env).
PlotDataset emit_plot_data(const EnrichedTable& table, PlotKind kind, const PlotOptions& options = {});

std::string plot_to_json(const PlotDataset& dataset);
std::string render_svg(const PlotDataset& dataset);

}  // namespace scraper
