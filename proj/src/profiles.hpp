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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "points.hpp"
#include "record_model.hpp"
#include "vision.hpp"

namespace scraper {

struct CharacterSpec {
  std::string name;
  ColorRange range;
};

struct StaticObject {
  std::string name;
  std::string kind;
  Point position;
};

enum class EventEffect { kMarkPillEaten, kRecordMiss };

struct EventRule {
  std::string name;
  Points trigger_reward;
  std::optional<std::string> proximity_target;  // static object kind
  std::optional<double> proximity_radius;
  EventEffect effect = EventEffect::kMarkPillEaten;
};

// Names fixed by the enriched output schema.
namespace names {
inline constexpr std::string_view kPacman = "pacman";
inline constexpr std::string_view kBall = "ball";
inline constexpr std::string_view kPaddleLeft = "paddle_left";
inline constexpr std::string_view kPaddleRight = "paddle_right";
inline constexpr std::string_view kPowerPill = "power_pill";
}  // namespace names

// Everything the enrichment pass knows about one game. Immutable once built.
struct GameProfile {
  Game game = Game::kMsPacman;
  int frame_width = kNativeWidth;
  int frame_height = kNativeHeight;
  Rect crop{0, 0, kNativeWidth - 1, kNativeHeight - 1};
  std::vector<CharacterSpec> characters;
  std::optional<ColorRange> frightened_range;
  std::vector<StaticObject> static_objects;
  std::vector<EventRule> event_rules;
  int min_pixels = 4;
  std::optional<double> pill_radius;
  std::string provenance;

  // Index into `characters`, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;
  const EventRule* rule(EventEffect effect) const;
};

GameProfile mspacman_profile();
GameProfile pong_profile();
GameProfile builtin_profile(Game game);

// Throws kSchema with a message naming the offending key.
GameProfile parse_profile(std::string_view json_text);
GameProfile load_profile(const std::filesystem::path& path);
std::string profile_to_json(const GameProfile& profile);

// Game-specific structural checks (character census, pills, rules, crop).
void check_profile(const GameProfile& profile);

// Range spanning the pixel's color +-tolerance on each channel, clamped to
// 0..255. Throws kGeometry when the point is outside the frame.
ColorRange calibrate_color(const RgbImage& frame, int x, int y, int tolerance);

}  // namespace scraper
