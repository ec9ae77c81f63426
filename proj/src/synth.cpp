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

#include "synth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "error.hpp"
#include "record_model.hpp"

namespace fs = std::filesystem;

namespace scraper::synth {

namespace {

// Scenery colors sampled from the reference frames.
constexpr Rgb kMazeBackground{0, 28, 136};
constexpr Rgb kMazeWall{228, 111, 111};
constexpr Rgb kMazeScore{195, 144, 61};
constexpr Rgb kCourt{144, 72, 17};
constexpr Rgb kCourtWall{236, 236, 236};

bool is_ghost(const GameProfile& p, std::string_view name) {
  return p.game == Game::kMsPacman && name != names::kPacman;
}

Rect grow(const Rect& r) { return {r.x0 - 1, r.y0 - 1, r.x1 + 1, r.y1 + 1}; }

bool intersects(const Rect& a, const Rect& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

void draw_maze(RgbImage& img, const GameProfile& p, const SceneSpec& scene) {
  img.fill_rect(img.bounds(), {0, 0, 0});
  img.fill_rect(p.crop, kMazeBackground);
  const Rect& c = p.crop;
  img.fill_rect({c.x0, c.y0 + 1, c.x1, c.y0 + 2}, kMazeWall);
  img.fill_rect({c.x0, c.y1 - 2, c.x1, c.y1 - 1}, kMazeWall);
  img.fill_rect({c.x0, c.y0 + 1, c.x0 + 3, c.y1 - 1}, kMazeWall);
  img.fill_rect({c.x1 - 3, c.y0 + 1, c.x1, c.y1 - 1}, kMazeWall);
  for (int y = c.y0 + 24; y < c.y1 - 12; y += 24) {
    img.fill_rect({c.x0 + 20, y, c.x0 + 60, y + 4}, kMazeWall);
    img.fill_rect({c.x1 - 60, y, c.x1 - 20, y + 4}, kMazeWall);
  }
  for (int y = c.y0 + 12; y < c.y1 - 6; y += 12)
    for (int x = c.x0 + 8; x < c.x1 - 8; x += 8) img.fill_rect({x, y, x + 3, y + 1}, kMazeWall);
  for (std::size_t i = 0; i < p.static_objects.size(); ++i) {
    if (i < scene.pills_visible.size() && !scene.pills_visible[i]) continue;
    const Point q = p.static_objects[i].position;
    const int x0 = static_cast<int>(q.x - 1.5), y0 = static_cast<int>(q.y - 3);
    img.fill_rect({x0, y0, x0 + 3, y0 + 6}, kMazeWall);
  }
  // HUD: remaining-life icons in the agent's own color, below the crop.
  if (const auto agent = p.index_of(names::kPacman); agent && c.y1 + 10 < img.height()) {
    const Rgb icon = p.characters[*agent].range.midpoint();
    img.fill_rect({12, c.y1 + 2, 19, c.y1 + 10}, icon);
    img.fill_rect({28, c.y1 + 2, 35, c.y1 + 10}, icon);
  }
  if (c.y1 + 20 < img.height()) img.fill_rect({80, c.y1 + 15, 101, c.y1 + 20}, kMazeScore);
}

void draw_court(RgbImage& img, const GameProfile& p) {
  img.fill_rect(img.bounds(), kCourt);
  const Rect& c = p.crop;
  img.fill_rect({0, std::max(0, c.y0 - 10), img.width() - 1, c.y0 - 1}, kCourtWall);
  img.fill_rect({0, c.y1 + 1, img.width() - 1, img.height() - 1}, kCourtWall);
  // Score digits in the paddle colors, above the court.
  if (const auto l = p.index_of(names::kPaddleLeft)) img.fill_rect({36, 1, 47, 20}, p.characters[*l].range.midpoint());
  if (const auto r = p.index_of(names::kPaddleRight)) img.fill_rect({116, 1, 127, 20}, p.characters[*r].range.midpoint());
}

}  // namespace

RenderedFrame render_frame(const SceneSpec& scene, const GameProfile& profile) {
  for (std::size_t i = 0; i < scene.sprites.size(); ++i) {
    const Sprite& s = scene.sprites[i];
    if (!profile.index_of(s.name)) fail(ErrorCode::kInvalidArgument, "unknown character '" + s.name + "'");
    const Rect& r = s.rect;
    if (r.x0 > r.x1 || r.y0 > r.y1 || r.x0 < profile.crop.x0 || r.y0 < profile.crop.y0 || r.x1 > profile.crop.x1 ||
        r.y1 > profile.crop.y1)
      fail(ErrorCode::kInvalidArgument, "sprite '" + s.name + "' outside the playfield crop");
    if (scene.allow_overlap) continue;
    for (std::size_t k = 0; k < i; ++k)
      if (intersects(grow(r), scene.sprites[k].rect))
        fail(ErrorCode::kInvalidArgument, "sprites '" + scene.sprites[k].name + "' and '" + s.name + "' overlap");
  }

  RenderedFrame out;
  out.image = RgbImage(profile.frame_width, profile.frame_height);
  if (profile.game == Game::kMsPacman)
    draw_maze(out.image, profile, scene);
  else
    draw_court(out.image, profile);

  out.oracle = DetectionSet::absent(profile);
  for (const Sprite& s : scene.sprites) {
    const std::size_t idx = *profile.index_of(s.name);
    const bool scared = scene.frightened && is_ghost(profile, s.name) && profile.frightened_range;
    const Rgb color = scared ? profile.frightened_range->midpoint() : profile.characters[idx].range.midpoint();
    out.image.fill_rect(s.rect, color);
    out.oracle.characters[idx] = {rect_center(s.rect),
                                  scared ? Provenance::kFallbackComponent : Provenance::kPrimaryColor};
    out.oracle.frightened = out.oracle.frightened || scared;
  }
  return out;
}

std::vector<std::optional<Point>> expected_positions(const SceneSpec& scene, const GameProfile& profile) {
  std::vector<std::optional<Point>> out(profile.characters.size());
  std::vector<Rect> scared;
  for (const Sprite& s : scene.sprites) {
    const std::size_t idx = *profile.index_of(s.name);
    if (scene.frightened && is_ghost(profile, s.name) && profile.frightened_range)
      scared.push_back(s.rect);
    else
      out[idx] = rect_center(s.rect);
  }
  std::stable_sort(scared.begin(), scared.end(), [](const Rect& a, const Rect& b) {
    const long aa = static_cast<long>(a.width()) * a.height(), ab = static_cast<long>(b.width()) * b.height();
    if (aa != ab) return aa > ab;
    return std::tie(a.y0, a.x0) < std::tie(b.y0, b.x0);
  });
  std::size_t next = 0;
  for (std::size_t i = 0; i < profile.characters.size() && next < scared.size(); ++i)
    if (is_ghost(profile, profile.characters[i].name) && !out[i]) out[i] = rect_center(scared[next++]);
  return out;
}

namespace {

Rect sprite_size(const GameProfile& p, std::string_view name, Rng& rng) {
  if (p.game == Game::kPong) {
    if (name == names::kBall) return {0, 0, 1, 3};
    return {0, 0, 3, rng.uniform(12, 15)};
  }
  return {0, 0, rng.uniform(3, 7), rng.uniform(3, 9)};
}

bool place(SceneSpec& scene, const GameProfile& p, const std::string& name, Rect size, Rng& rng,
           std::optional<int> fixed_x = std::nullopt) {
  const Rect& c = p.crop;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const int x0 = fixed_x ? *fixed_x : rng.uniform(c.x0, c.x1 - size.x1);
    const int y0 = rng.uniform(c.y0, c.y1 - size.y1);
    const Rect r{x0, y0, x0 + size.x1, y0 + size.y1};
    bool ok = true;
    for (const Sprite& s : scene.sprites) ok = ok && !intersects(grow(r), s.rect);
    if (ok) {
      scene.sprites.push_back({name, r});
      return true;
    }
  }
  return false;
}

constexpr int kLeftPaddleX = 16;
constexpr int kRightPaddleX = 140;

}  // namespace

SceneSpec random_scene(const GameProfile& profile, Rng& rng, bool frightened) {
  SceneSpec scene;
  scene.frightened = frightened;
  for (const auto& ch : profile.characters) {
    std::optional<int> x;
    if (ch.name == names::kPaddleLeft) x = kLeftPaddleX;
    if (ch.name == names::kPaddleRight) x = kRightPaddleX;
    if (!place(scene, profile, ch.name, sprite_size(profile, ch.name, rng), rng, x))
      fail(ErrorCode::kInvalidArgument, "could not place sprite '" + ch.name + "'");
  }
  return scene;
}

std::vector<EnrichedRecord> expected_enrichment(const EpisodeScript& script, std::uint32_t env,
                                                const GameProfile& profile) {
  std::vector<EnrichedRecord> out;
  const auto chars = schema_characters(script.game);
  Points life_reward, game_reward, total_reward;
  std::uint64_t life_step = 0, game_step = 0;
  std::vector<bool> pills(kPillCount, false);
  const ScriptStep* prev = nullptr;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& s = script.steps[i];
    if (s.env != env) continue;
    const bool new_game = !prev || prev->game_number != s.game_number;
    const bool new_life = new_game || prev->life_number != s.life_number;
    if (new_game) {
      game_reward = {};
      game_step = 0;
      pills.assign(kPillCount, false);
    }
    if (new_life) {
      life_reward = {};
      life_step = 0;
    }
    life_reward += s.reward;
    game_reward += s.reward;
    total_reward += s.reward;

    EnrichedRecord e;
    e.raw = {script.step_index[i], s.env, s.action, "", s.reward, s.lives, s.done,
             s.has_frame ? (fs::path("frames") / frame_file_name(s.env, script.step_index[i])).generic_string() : ""};
    e.game_number = s.game_number;
    e.life_number = s.life_number;
    e.life_lost = s.life_lost;
    e.end_of_game = s.done;
    e.life_step = ++life_step;
    e.game_step = ++game_step;
    e.life_reward = life_reward;
    e.game_reward = game_reward;
    e.total_reward = total_reward;
    if (s.done) e.reward_at_end_of_game = game_reward;

    std::vector<std::optional<Point>> by_profile(profile.characters.size());
    if (s.has_frame) by_profile = expected_positions(s.scene, profile);
    for (auto name : chars) {
      const auto idx = profile.index_of(name);
      e.positions.push_back(idx ? by_profile[*idx] : std::nullopt);
    }
    if (script.game == Game::kMsPacman) {
      bool any_ghost = false;
      for (const auto& sp : s.scene.sprites) any_ghost = any_ghost || sp.name != names::kPacman;
      e.frightened = s.has_frame && s.scene.frightened && any_ghost;
      const auto& agent = e.positions[0];
      for (std::size_t g = 0; g < kGhostCount; ++g) {
        const auto& ghost = e.positions[g + 1];
        e.ghost_distances.push_back(agent && ghost ? std::optional<double>(distance(*agent, *ghost)) : std::nullopt);
      }
      if (s.eats_pill) pills[*s.eats_pill] = true;
      e.pill_eaten = pills;
      for (std::size_t p = 0; p < kPillCount; ++p)
        e.pill_distances.push_back(agent ? std::optional<double>(distance(*agent, profile.static_objects[p].position))
                                         : std::nullopt);
    } else {
      const auto& ball = e.positions[0];
      const auto& paddle = e.positions[2];
      e.dist_paddle_ball = ball && paddle ? std::optional<double>(distance(*paddle, *ball)) : std::nullopt;
      e.miss = s.miss;
    }
    out.push_back(std::move(e));
    prev = &s;
  }
  return out;
}

namespace {

std::string action_name(Game game, std::uint32_t action) {
  static const char* kPacman[] = {"NOOP", "UP", "RIGHT", "LEFT", "DOWN", "UPRIGHT", "UPLEFT", "DOWNRIGHT", "DOWNLEFT"};
  static const char* kPong[] = {"NOOP", "FIRE", "RIGHT", "LEFT", "RIGHTFIRE", "LEFTFIRE"};
  if (game == Game::kPong) return action < 6 ? kPong[action] : "UNKNOWN";
  return action < 9 ? kPacman[action] : "UNKNOWN";
}

}  // namespace

ScriptOutput script_episode(const EpisodeScript& script, const fs::path& out_dir, const GameProfile& profile) {
  if (profile.game != script.game) fail(ErrorCode::kInvalidArgument, "profile does not match the script's game");
  Manifest m;
  m.game = script.game;
  m.num_envs = script.num_envs;
  m.algorithm = script.algorithm;
  m.frame_width = profile.frame_width;
  m.frame_height = profile.frame_height;
  ScriptOutput out;
  out.run_dir = out_dir;
  {
    RawLogWriter writer(out_dir, m);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
      const ScriptStep& s = script.steps[i];
      StepRecord r{script.step_index[i], s.env, s.action, action_name(script.game, s.action), s.reward, s.lives,
                   s.done, ""};
      if (s.has_frame) r.frame = writer.save_frame(s.env, r.step, render_frame(s.scene, profile).image);
      writer.append(r);
    }
    writer.close();
  }
  for (std::uint32_t env = 0; env < script.num_envs; ++env) {
    auto rows = expected_enrichment(script, env, profile);
    for (auto& e : rows) e.raw.action_name = action_name(script.game, e.raw.action);
    const fs::path path = out_dir / ("expected_" + enriched_file_name(env));
    write_enriched_csv(path, script.game, rows);
    out.expected.push_back(path);
  }
  return out;
}

namespace {

// Interleaves per-env sequences into batch order, padding shorter envs with
// an unfinished trailing game.
EpisodeScript interleave(Game game, std::vector<std::vector<ScriptStep>> per_env,
                         const std::function<ScriptStep(std::uint32_t env, const ScriptStep* last)>& pad,
                         std::uint32_t tail) {
  EpisodeScript script;
  script.game = game;
  script.num_envs = static_cast<std::uint32_t>(per_env.size());
  std::size_t longest = 0;
  for (const auto& s : per_env) longest = std::max(longest, s.size());
  longest += tail;
  for (std::uint32_t e = 0; e < per_env.size(); ++e)
    while (per_env[e].size() < longest) {
      const ScriptStep* last = per_env[e].empty() ? nullptr : &per_env[e].back();
      per_env[e].push_back(pad(e, last));
    }
  for (std::size_t t = 0; t < longest; ++t)
    for (std::uint32_t e = 0; e < per_env.size(); ++e) {
      script.step_index.push_back(t);
      script.steps.push_back(per_env[e][t]);
    }
  return script;
}

SceneSpec pacman_at(const GameProfile& p, Rng& rng, Point target, bool frightened) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    SceneSpec scene;
    scene.frightened = frightened;
    const int w = rng.uniform(3, 7), h = rng.uniform(3, 9);
    const int x0 = static_cast<int>(target.x - w / 2.0), y0 = static_cast<int>(target.y - h / 2.0);
    const Rect r{std::clamp(x0, p.crop.x0, p.crop.x1 - w), std::clamp(y0, p.crop.y0, p.crop.y1 - h), 0, 0};
    scene.sprites.push_back({std::string(names::kPacman), {r.x0, r.y0, r.x0 + w, r.y0 + h}});
    bool ok = true;
    for (const auto& ch : p.characters) {
      if (ch.name == names::kPacman) continue;
      Rect size{0, 0, rng.uniform(3, 7), rng.uniform(3, 9)};
      ok = ok && place(scene, p, ch.name, size, rng);
    }
    if (ok) return scene;
  }
  fail(ErrorCode::kInvalidArgument, "could not build a scene around the requested agent position");
}

}  // namespace

EpisodeScript mspacman_script(const PacmanScriptParams& params) {
  const GameProfile profile = mspacman_profile();
  Rng rng(params.seed);
  std::vector<std::vector<ScriptStep>> per_env(params.num_envs);
  const std::uint32_t steps_per_game = params.lives_per_game * params.steps_per_life;

  for (std::uint32_t env = 0; env < params.num_envs; ++env) {
    const std::uint32_t games = params.games_per_env[env % params.games_per_env.size()];
    for (std::uint32_t g = 1; g <= games; ++g) {
      // Pill crossings at distinct in-game offsets, each pill once. Offset 0 is
      // skipped so every game starts with all pills uneaten.
      std::vector<std::uint32_t> offsets(steps_per_game > 0 ? steps_per_game - 1 : 0);
      std::iota(offsets.begin(), offsets.end(), 1u);
      for (std::size_t i = offsets.size(); i > 1; --i) std::swap(offsets[i - 1], offsets[rng.next() % i]);
      std::vector<std::size_t> order = {0, 1, 2, 3};
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.next() % i]);
      std::map<std::uint32_t, std::size_t> pill_at;
      if (params.cross_pills)
        for (std::size_t k = 0; k < kPillCount && k < offsets.size(); ++k) pill_at[offsets[k]] = order[k];
      std::optional<std::uint32_t> adversarial;
      if (params.adversarial_pill_reward && offsets.size() > kPillCount) adversarial = offsets[kPillCount];

      std::uint32_t frightened_left = 0;
      for (std::uint32_t life = 1; life <= params.lives_per_game; ++life) {
        for (std::uint32_t s = 0; s < params.steps_per_life; ++s) {
          const std::uint32_t offset = (life - 1) * params.steps_per_life + s;
          ScriptStep st;
          st.env = env;
          st.action = static_cast<std::uint32_t>(rng.uniform(0, 8));
          st.lives = params.lives_per_game - life + 1;
          st.game_number = g;
          st.life_number = life;
          st.life_lost = life > 1 && s == 0;
          st.done = life == params.lives_per_game && s + 1 == params.steps_per_life;
          const bool scared = frightened_left > 0;
          if (frightened_left) --frightened_left;
          if (auto it = pill_at.find(offset); it != pill_at.end()) {
            const Point pill = profile.static_objects[it->second].position;
            const Point target{pill.x + rng.uniform(-4, 4), pill.y + rng.uniform(-4, 4)};
            st.scene = pacman_at(profile, rng, target, scared);
            st.reward = Points::whole(50);
            st.eats_pill = it->second;
            frightened_left = 3;
          } else if (adversarial && offset == *adversarial) {
            // Centre of the maze: far from every pill.
            st.scene = pacman_at(profile, rng, {80, 90}, scared);
            st.reward = Points::whole(50);
          } else {
            st.scene = random_scene(profile, rng, scared);
            st.reward = Points::whole(rng.chance(30) ? 10 : 0);
          }
          for (std::size_t p = 0; p < kPillCount; ++p) {
            // Eaten pills disappear from later frames of the game.
            bool eaten_before = false;
            for (const auto& [off, idx] : pill_at) eaten_before = eaten_before || (idx == p && off < offset);
            st.scene.pills_visible[p] = !eaten_before;
          }
          per_env[env].push_back(std::move(st));
        }
      }
    }
  }
  auto pad = [&](std::uint32_t env, const ScriptStep* last) {
    ScriptStep st;
    st.env = env;
    st.action = static_cast<std::uint32_t>(rng.uniform(0, 8));
    const bool continuing = last && !last->done;
    st.game_number = last ? (continuing ? last->game_number : last->game_number + 1) : 1;
    st.life_number = continuing ? last->life_number : 1;
    st.lives = continuing ? last->lives : params.lives_per_game;
    st.scene = random_scene(profile, rng, false);
    st.reward = Points::whole(rng.chance(30) ? 10 : 0);
    return st;
  };
  EpisodeScript script = interleave(Game::kMsPacman, std::move(per_env), pad, params.truncated_tail);
  return script;
}

EpisodeScript pong_script(const PongScriptParams& params) {
  const GameProfile profile = pong_profile();
  Rng rng(params.seed);
  std::vector<std::vector<ScriptStep>> per_env(params.num_envs);
  const Rect& crop = profile.crop;
  for (std::uint32_t env = 0; env < params.num_envs; ++env) {
    for (std::uint32_t g = 1; g <= params.games; ++g) {
      std::vector<bool> points(params.opponent_points, true);
      points.insert(points.end(), params.agent_points, false);
      for (std::size_t i = points.size(); i > 1; --i) {
        const std::size_t k = rng.next() % i;
        const bool tmp = points[i - 1];
        points[i - 1] = points[k];
        points[k] = tmp;
      }
      std::size_t miss_index = 0;
      for (std::size_t pt = 0; pt < points.size(); ++pt) {
        const bool opponent = points[pt];
        std::optional<Rect> last_ball;
        for (std::uint32_t s = 0; s <= params.rally_steps; ++s) {
          ScriptStep st;
          st.env = env;
          st.action = static_cast<std::uint32_t>(rng.uniform(0, 5));
          st.game_number = g;
          const bool point_step = s == params.rally_steps;
          st.done = point_step && pt + 1 == points.size();
          const int paddle_y = rng.uniform(crop.y0, crop.y1 - 15);
          const Rect paddle_right{kRightPaddleX, paddle_y, kRightPaddleX + 3, paddle_y + 15};
          const int left_y = rng.uniform(crop.y0, crop.y1 - 15);
          st.scene.sprites.push_back({std::string(names::kPaddleLeft), {kLeftPaddleX, left_y, kLeftPaddleX + 3, left_y + 15}});
          st.scene.sprites.push_back({std::string(names::kPaddleRight), paddle_right});
          auto ball_at = [&](int x, int y) { return Rect{x, y, x + 1, y + 3}; };
          std::optional<Rect> ball;
          if (!point_step && s + 1 == params.rally_steps && opponent) {
            // Ball slipping past the agent's paddle.
            ball = ball_at(rng.uniform(146, 157), rng.uniform(crop.y0, crop.y1 - 3));
          } else if (!point_step) {
            ball = ball_at(rng.uniform(24, 132), rng.uniform(crop.y0, crop.y1 - 3));
          } else if (opponent) {
            const bool exits = params.ball_exits && miss_index % 2 == 1;
            if (!exits) ball = ball_at(rng.uniform(146, 157), rng.uniform(crop.y0, crop.y1 - 3));
            st.miss = true;
            st.reward = Points::whole(-1);
            const Rect seen = ball ? *ball : *last_ball;
            st.miss_distance = distance(rect_center(paddle_right), rect_center(seen));
            st.stale_ball = !ball;
            ++miss_index;
          } else {
            ball = ball_at(rng.uniform(2, 12), rng.uniform(crop.y0, crop.y1 - 3));
            st.reward = Points::whole(1);
          }
          if (ball) st.scene.sprites.push_back({std::string(names::kBall), *ball});
          st.scene.allow_overlap = false;
          // Keep the ball clear of the paddles.
          bool clash = false;
          for (std::size_t a = 0; a + 1 < st.scene.sprites.size(); ++a)
            if (ball && intersects(grow(*ball), st.scene.sprites[a].rect)) clash = true;
          if (clash) {
            st.scene.sprites.pop_back();
            const int y = paddle_right.y1 + 3 <= crop.y1 - 3 ? paddle_right.y1 + 3 : paddle_right.y0 - 7;
            ball = ball_at(ball->x0, y);
            st.scene.sprites.push_back({std::string(names::kBall), *ball});
            if (st.miss && !st.stale_ball) st.miss_distance = distance(rect_center(paddle_right), rect_center(*ball));
          }
          if (ball) last_ball = ball;
          per_env[env].push_back(std::move(st));
        }
      }
    }
  }
  auto pad = [&](std::uint32_t env, const ScriptStep* last) {
    ScriptStep st;
    st.env = env;
    st.game_number = last ? (last->done ? last->game_number + 1 : last->game_number) : 1;
    st.scene = random_scene(profile, rng, false);
    return st;
  };
  return interleave(Game::kPong, std::move(per_env), pad, 0);
}

std::vector<std::string> scenario_names() {
  return {"empty", "mspacman-3game", "mspacman-2env", "mspacman-4env", "mspacman-truncated",
          "pong", "pong-2env", "throughput"};
}

std::optional<EpisodeScript> scenario(std::string_view name) {
  if (name == "empty") {
    EpisodeScript s;
    s.game = Game::kMsPacman;
    return s;
  }
  if (name == "mspacman-3game") {
    PacmanScriptParams p;
    p.adversarial_pill_reward = true;
    return mspacman_script(p);
  }
  if (name == "mspacman-2env") {
    PacmanScriptParams p;
    p.num_envs = 2;
    p.games_per_env = {3, 3};
    return mspacman_script(p);
  }
  if (name == "mspacman-4env") {
    PacmanScriptParams p;
    p.num_envs = 4;
    p.games_per_env = {2, 3, 1, 2};
    p.steps_per_life = 8;
    p.truncated_tail = 5;
    p.seed = 21;
    return mspacman_script(p);
  }
  if (name == "mspacman-truncated") {
    PacmanScriptParams p;
    p.games_per_env = {2};
    p.truncated_tail = 7;
    return mspacman_script(p);
  }
  if (name == "pong") return pong_script({});
  if (name == "pong-2env") {
    PongScriptParams p;
    p.num_envs = 2;
    return pong_script(p);
  }
  if (name == "throughput") {
    PacmanScriptParams p;
    p.games_per_env = {33};
    p.steps_per_life = 100;
    p.truncated_tail = 100;
    p.seed = 99;
    return mspacman_script(p);
  }
  return std::nullopt;
}

}  // namespace scraper::synth
