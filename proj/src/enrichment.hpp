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
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "findings.hpp"
#include "locate.hpp"
#include "profiles.hpp"
#include "record_model.hpp"

namespace scraper {

// A raw step joined with segmentation, ledgers, detections and events.
// Position/distance vectors follow the enriched schema order of the game (see
// schema_characters), not the profile's character order.
struct EnrichedRecord {
  StepRecord raw;

  std::uint32_t game_number = 1;
  std::uint32_t life_number = 1;
  std::uint64_t life_step = 0;
  std::uint64_t game_step = 0;
  bool life_lost = false;
  bool end_of_game = false;

  Points life_reward;
  Points game_reward;
  Points total_reward;
  std::optional<Points> reward_at_end_of_game;

  std::vector<std::optional<Point>> positions;
  bool frightened = false;

  // Ms. Pacman
  std::vector<std::optional<double>> ghost_distances;
  std::vector<bool> pill_eaten;
  std::vector<std::optional<double>> pill_distances;

  // Pong
  std::optional<double> dist_paddle_ball;
  bool miss = false;

  Points step_reward() const { return raw.reward; }
  std::optional<Point> position(Game game, std::string_view name) const;

  friend bool operator==(const EnrichedRecord&, const EnrichedRecord&) = default;
};

struct MissEvent {
  std::uint64_t step = 0;
  std::uint32_t env = 0;
  std::uint32_t game_number = 0;
  std::optional<double> distance;
  bool stale_ball = false;
};

// Character names in enriched column order: pacman, ghost1..4 or ball,
// paddle_left, paddle_right.
std::span<const std::string_view> schema_characters(Game game);
inline constexpr std::size_t kGhostCount = 4;
inline constexpr std::size_t kPillCount = 4;

// Splits a log into per-env streams, preserving log order within each.
std::map<std::uint32_t, std::vector<StepRecord>> demux(const RawLog& log);

// Assigns game/life indices from the done flags and lives counter. Lives
// rising inside a game is reported and otherwise ignored.
std::vector<EnrichedRecord> segment(std::span<const StepRecord> stream, const GameProfile& profile, Report& findings);

// Fills step counters and reward ledgers of a segmented stream in place.
void accumulate(std::span<EnrichedRecord> stream);

// `detections[i]` belongs to `stream[i]`; nullopt means no usable frame.
void attach_detections(std::span<EnrichedRecord> stream, std::span<const std::optional<DetectionSet>> detections,
                       const GameProfile& profile);

// Per-game pill ledger; all false at game start.
struct PillState {
  std::vector<bool> eaten = std::vector<bool>(kPillCount, false);
};

// Trigger reward plus a detected agent within the rule radius of an uneaten
// pill marks the nearest such pill eaten. Copies the ledger onto `record`.
void infer_pill_events(EnrichedRecord& record, PillState& pills, const GameProfile& profile, Report& findings);

// Miss on the trigger reward; distance from the agent paddle to the ball, or to
// `last_ball` (stale) when the ball is not visible.
std::optional<MissEvent> detect_miss(const EnrichedRecord& record, std::optional<Point> last_ball,
                                     const GameProfile& profile, Report& findings);

// Runs detect_miss over one env's enriched stream, tracking the last visible
// ball within each game.
std::vector<MissEvent> collect_misses(std::span<const EnrichedRecord> stream, const GameProfile& profile,
                                      Report& findings);

// Segment + accumulate + attach + events for one env stream.
std::vector<EnrichedRecord> enrich_stream(std::span<const StepRecord> stream,
                                          std::span<const std::optional<DetectionSet>> detections,
                                          const GameProfile& profile, Report& findings);

// Enriched CSV I/O.
std::string enriched_header(Game game);
std::string format_enriched_row(const EnrichedRecord& record, Game game);
void write_enriched_csv(const std::filesystem::path& path, Game game, std::span<const EnrichedRecord> records);
struct EnrichedTable {
  Game game = Game::kMsPacman;
  std::vector<EnrichedRecord> records;
};
// Throws kParse carrying the 1-based line number on malformed input.
EnrichedTable read_enriched_csv(const std::filesystem::path& path);

std::string enriched_file_name(std::uint32_t env);

struct ExpandOptions {
  bool delete_frames = false;
  unsigned workers = 1;
  std::filesystem::path out_dir;          // empty: the run directory
  std::optional<GameProfile> profile;     // empty: built-in for the manifest's game
};

struct ExpandResult {
  bool refused = false;
  Report report;
  std::vector<std::filesystem::path> outputs;
  std::size_t records = 0;
  std::size_t frames_deleted = 0;
};

// Two-phase expansion: frame analysis fans out over `workers`, then each env
// stream is enriched sequentially. Output bytes do not depend on `workers`.
// Frames are deleted only after every output file has been synced.
ExpandResult expand(const std::filesystem::path& run_dir, const ExpandOptions& options);

}  // namespace scraper
