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

#include "enrichment.hpp"

#include <array>
#include <limits>

#include "error.hpp"
#include "text.hpp"

namespace scraper {

namespace {

constexpr std::array<std::string_view, 5> kPacmanCharacters = {"pacman", "ghost1", "ghost2", "ghost3", "ghost4"};
constexpr std::array<std::string_view, 3> kPongCharacters = {"ball", "paddle_left", "paddle_right"};

}  // namespace

std::span<const std::string_view> schema_characters(Game game) {
  if (game == Game::kPong) return kPongCharacters;
  return kPacmanCharacters;
}

std::optional<Point> EnrichedRecord::position(Game game, std::string_view name) const {
  const auto chars = schema_characters(game);
  for (std::size_t i = 0; i < chars.size() && i < positions.size(); ++i)
    if (chars[i] == name) return positions[i];
  return std::nullopt;
}

std::map<std::uint32_t, std::vector<StepRecord>> demux(const RawLog& log) {
  std::map<std::uint32_t, std::vector<StepRecord>> streams;
  for (const auto& r : log.records) streams[r.env].push_back(r);
  return streams;
}

std::vector<EnrichedRecord> segment(std::span<const StepRecord> stream, const GameProfile& profile, Report& findings) {
  (void)profile;
  std::vector<EnrichedRecord> out;
  out.reserve(stream.size());
  std::uint32_t game = 1, life = 1;
  bool game_start = true;
  std::uint32_t prev_lives = 0;
  for (const StepRecord& r : stream) {
    EnrichedRecord e;
    e.raw = r;
    if (game_start) {
      life = 1;
    } else if (r.lives < prev_lives) {
      e.life_lost = true;
      ++life;
    } else if (r.lives > prev_lives) {
      findings.push_back({Level::kWarn, r.env, r.step,
                          "lives increased from " + std::to_string(prev_lives) + " to " + std::to_string(r.lives) +
                              " within game " + std::to_string(game)});
    }
    e.game_number = game;
    e.life_number = life;
    e.end_of_game = r.done;
    out.push_back(std::move(e));
    prev_lives = r.lives;
    game_start = r.done;
    if (r.done) ++game;
  }
  return out;
}

void accumulate(std::span<EnrichedRecord> stream) {
  Points life_reward, game_reward, total_reward;
  std::uint64_t life_step = 0, game_step = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    EnrichedRecord& e = stream[i];
    const bool new_game = i == 0 || e.game_number != stream[i - 1].game_number;
    const bool new_life = new_game || e.life_number != stream[i - 1].life_number;
    if (new_game) {
      game_reward = {};
      game_step = 0;
    }
    if (new_life) {
      life_reward = {};
      life_step = 0;
    }
    life_reward += e.raw.reward;
    game_reward += e.raw.reward;
    total_reward += e.raw.reward;
    e.life_step = ++life_step;
    e.game_step = ++game_step;
    e.life_reward = life_reward;
    e.game_reward = game_reward;
    e.total_reward = total_reward;
    e.reward_at_end_of_game = e.end_of_game ? std::optional<Points>(game_reward) : std::nullopt;
  }
}

void attach_detections(std::span<EnrichedRecord> stream, std::span<const std::optional<DetectionSet>> detections,
                       const GameProfile& profile) {
  if (detections.size() != stream.size())
    fail(ErrorCode::kInvalidArgument, "detections do not line up with the stream");
  const auto chars = schema_characters(profile.game);
  std::vector<std::optional<std::size_t>> slot(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) slot[i] = profile.index_of(chars[i]);

  for (std::size_t k = 0; k < stream.size(); ++k) {
    EnrichedRecord& e = stream[k];
    e.positions.assign(chars.size(), std::nullopt);
    e.frightened = false;
    if (const auto& d = detections[k]) {
      for (std::size_t i = 0; i < chars.size(); ++i)
        if (slot[i] && *slot[i] < d->characters.size()) e.positions[i] = d->characters[*slot[i]].position;
      e.frightened = d->frightened;
    }
    if (profile.game == Game::kMsPacman) {
      const auto& agent = e.positions[0];
      e.ghost_distances.assign(kGhostCount, std::nullopt);
      for (std::size_t g = 0; g < kGhostCount; ++g)
        if (agent && e.positions[g + 1]) e.ghost_distances[g] = distance(*agent, *e.positions[g + 1]);
      e.pill_distances.assign(kPillCount, std::nullopt);
      for (std::size_t p = 0; p < kPillCount && p < profile.static_objects.size(); ++p)
        if (agent) e.pill_distances[p] = distance(*agent, profile.static_objects[p].position);
    } else {
      const auto& ball = e.positions[0];
      const auto& paddle = e.positions[2];
      e.dist_paddle_ball = ball && paddle ? std::optional<double>(distance(*paddle, *ball)) : std::nullopt;
    }
  }
}

void infer_pill_events(EnrichedRecord& record, PillState& pills, const GameProfile& profile, Report& findings) {
  const EventRule* rule = profile.rule(EventEffect::kMarkPillEaten);
  if (rule && record.raw.reward == rule->trigger_reward) {
    const auto agent = record.position(profile.game, names::kPacman);
    std::optional<std::size_t> best;
    double best_distance = std::numeric_limits<double>::infinity();
    if (agent) {
      for (std::size_t p = 0; p < profile.static_objects.size() && p < pills.eaten.size(); ++p) {
        const StaticObject& obj = profile.static_objects[p];
        if (pills.eaten[p] || obj.kind != *rule->proximity_target) continue;
        const double d = distance(*agent, obj.position);
        if (d <= *rule->proximity_radius && d < best_distance) {
          best = p;
          best_distance = d;
        }
      }
    }
    if (best) {
      pills.eaten[*best] = true;
    } else {
      findings.push_back({Level::kWarn, record.raw.env, record.raw.step,
                          "unmatched " + rule->name + " reward " + record.raw.reward.to_string() +
                              (agent ? ": no uneaten pill within radius" : ": agent not detected")});
    }
  }
  record.pill_eaten = pills.eaten;
}

std::optional<MissEvent> detect_miss(const EnrichedRecord& record, std::optional<Point> last_ball,
                                     const GameProfile& profile, Report& findings) {
  const EventRule* rule = profile.rule(EventEffect::kRecordMiss);
  if (!rule || record.raw.reward != rule->trigger_reward) return std::nullopt;
  MissEvent ev{record.raw.step, record.raw.env, record.game_number, std::nullopt, false};
  const auto paddle = record.position(profile.game, names::kPaddleRight);
  std::optional<Point> ball = record.position(profile.game, names::kBall);
  if (!ball && last_ball) {
    ball = last_ball;
    ev.stale_ball = true;
  }
  if (paddle && ball) {
    ev.distance = distance(*paddle, *ball);
  } else {
    findings.push_back({Level::kWarn, record.raw.env, record.raw.step,
                        std::string("miss without distance: ") + (paddle ? "ball never seen" : "paddle not detected")});
  }
  return ev;
}

std::vector<MissEvent> collect_misses(std::span<const EnrichedRecord> stream, const GameProfile& profile,
                                      Report& findings) {
  std::vector<MissEvent> out;
  std::optional<Point> last_ball;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const EnrichedRecord& e = stream[i];
    if (i > 0 && e.game_number != stream[i - 1].game_number) last_ball.reset();
    if (auto ev = detect_miss(e, last_ball, profile, findings)) out.push_back(*ev);
    if (auto ball = e.position(profile.game, names::kBall)) last_ball = ball;
  }
  return out;
}

std::vector<EnrichedRecord> enrich_stream(std::span<const StepRecord> stream,
                                          std::span<const std::optional<DetectionSet>> detections,
                                          const GameProfile& profile, Report& findings) {
  std::vector<EnrichedRecord> out = segment(stream, profile, findings);
  accumulate(out);
  attach_detections(out, detections, profile);
  if (profile.game == Game::kMsPacman) {
    PillState pills;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i > 0 && out[i].game_number != out[i - 1].game_number) pills = PillState{};
      infer_pill_events(out[i], pills, profile, findings);
    }
  } else {
    for (EnrichedRecord& e : out) {
      const EventRule* rule = profile.rule(EventEffect::kRecordMiss);
      e.miss = rule && e.raw.reward == rule->trigger_reward;
    }
    collect_misses(out, profile, findings);
  }
  if (!out.empty() && !out.back().end_of_game)
    findings.push_back({Level::kWarn, out.back().raw.env, out.back().raw.step,
                        "unfinished final game " + std::to_string(out.back().game_number) + " (no done flag)"});
  return out;
}

}  // namespace scraper
