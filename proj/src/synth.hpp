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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "enrichment.hpp"
#include "image.hpp"
#include "locate.hpp"
#include "profiles.hpp"

// Synthetic frames and scripted runs with analytically known ground truth.
namespace scraper::synth {

struct Sprite {
  std::string name;  // profile character name
  Rect rect;
};

struct SceneSpec {
  std::vector<Sprite> sprites;
  bool frightened = false;     // ghosts drawn in the frightened color
  bool allow_overlap = false;  // sprites may touch or overlap
  std::vector<bool> pills_visible = std::vector<bool>(kPillCount, true);
};

inline Point rect_center(const Rect& r) {
  return {r.x0 + (r.width() - 1) / 2.0, r.y0 + (r.height() - 1) / 2.0};
}

struct RenderedFrame {
  RgbImage image;
  // Truth per profile character. In frightened scenes ghosts carry
  // kFallbackComponent and their true rectangle centers.
  DetectionSet oracle;
};

// Solid rectangles in the midpoint color of each range over a static maze or
// court drawn in scenery colors. Throws kInvalidArgument on overlap (unless
// allowed) or on sprites outside the playfield crop.
RenderedFrame render_frame(const SceneSpec& scene, const GameProfile& profile);

// Expected slot assignment of frightened ghosts: placed ghost rectangles sorted
// by area descending, then (y0, x0), fill ghost slots in profile order.
std::vector<std::optional<Point>> expected_positions(const SceneSpec& scene, const GameProfile& profile);

struct ScriptStep {
  std::uint32_t env = 0;
  std::uint32_t action = 0;
  Points reward;
  std::uint32_t lives = 0;
  bool done = false;
  SceneSpec scene;
  bool has_frame = true;

  // Declared ground truth.
  std::uint32_t game_number = 1;
  std::uint32_t life_number = 1;
  bool life_lost = false;
  std::optional<std::size_t> eats_pill;
  bool miss = false;
  std::optional<double> miss_distance;  // paddle-ball gap the script intends
  bool stale_ball = false;
};

struct EpisodeScript {
  Game game = Game::kMsPacman;
  std::uint32_t num_envs = 1;
  std::string algorithm = "synthetic";
  // Global step index per entry; entries sorted by (step, env).
  std::vector<std::uint64_t> step_index;
  std::vector<ScriptStep> steps;
};

struct ScriptOutput {
  std::filesystem::path run_dir;
  std::vector<std::filesystem::path> expected;  // expected_enriched_env{N}.csv
};

// Oracle enrichment of one env of a script, value by value.
std::vector<EnrichedRecord> expected_enrichment(const EpisodeScript& script, std::uint32_t env,
                                                const GameProfile& profile);

// Writes a run directory (manifest.json, steps.csv, frames/) plus the oracle
// expected_enriched_env{N}.csv files.
ScriptOutput script_episode(const EpisodeScript& script, const std::filesystem::path& out_dir,
                            const GameProfile& profile);

// Deterministic generator (mt19937_64 with modular draws, identical on every
// platform).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

// Random non-overlapping placement of every profile character (frightened
// optional). Throws kInvalidArgument if placement keeps failing.
SceneSpec random_scene(const GameProfile& profile, Rng& rng, bool frightened = false);

struct PacmanScriptParams {
  std::uint32_t num_envs = 1;
  std::vector<std::uint32_t> games_per_env = {3};
  std::uint32_t lives_per_game = 3;
  std::uint32_t steps_per_life = 12;
  bool cross_pills = true;          // each game eats all four pills
  bool adversarial_pill_reward = false;  // one +50 far from every pill per game
  std::uint32_t truncated_tail = 0;  // extra steps of an unfinished final game
  std::uint64_t seed = 7;
};
EpisodeScript mspacman_script(const PacmanScriptParams& params);

struct PongScriptParams {
  std::uint32_t num_envs = 1;
  std::uint32_t games = 2;
  std::uint32_t opponent_points = 5;  // per game
  std::uint32_t agent_points = 2;     // per game
  std::uint32_t rally_steps = 6;
  bool ball_exits = true;  // ball invisible on some miss frames
  std::uint64_t seed = 11;
};
EpisodeScript pong_script(const PongScriptParams& params);

// Named scenarios for the CLI.
std::vector<std::string> scenario_names();
std::optional<EpisodeScript> scenario(std::string_view name);

}  // namespace scraper::synth
