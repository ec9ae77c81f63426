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

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>

#include "enrichment.hpp"
#include "error.hpp"
#include "text.hpp"

namespace scraper {

namespace {

constexpr std::string_view kPacmanHeader =
    "step,env,game_number,life_number,life_step,game_step,action,action_name,step_reward,life_reward,game_reward,"
    "total_reward,lives,life_lost,end_of_game,reward_at_end_of_game,pacman_x,pacman_y,ghost1_x,ghost1_y,ghost2_x,"
    "ghost2_y,ghost3_x,ghost3_y,ghost4_x,ghost4_y,dist_ghost1,dist_ghost2,dist_ghost3,dist_ghost4,pill1_eaten,"
    "pill2_eaten,pill3_eaten,pill4_eaten,dist_pill1,dist_pill2,dist_pill3,dist_pill4,frightened";
constexpr std::string_view kPongHeader =
    "step,env,game_number,game_step,action,action_name,step_reward,game_reward,total_reward,end_of_game,ball_x,"
    "ball_y,paddle_left_x,paddle_left_y,paddle_right_x,paddle_right_y,dist_paddle_ball,miss";

std::string opt(const std::optional<double>& v) { return v ? text::format_double(*v) : std::string(); }
std::string opt(const std::optional<Points>& v) { return v ? v->to_string() : std::string(); }
std::string flag(bool b) { return b ? "1" : "0"; }

void push_position(std::vector<std::string>& f, const std::optional<Point>& p) {
  f.push_back(p ? text::format_double(p->x) : std::string());
  f.push_back(p ? text::format_double(p->y) : std::string());
}

std::size_t column_count(Game game) {
  const auto h = game == Game::kPong ? kPongHeader : kPacmanHeader;
  return static_cast<std::size_t>(std::count(h.begin(), h.end(), ',')) + 1;
}

class RowReader {
 public:
  RowReader(const std::vector<std::string>& fields, std::size_t line) : f_(fields), line_(line) {}

  std::uint64_t uint(std::uint64_t max_value = UINT64_MAX) {
    const std::string& s = next();
    const auto v = text::parse_uint(s);
    if (!v || *v > max_value) bad(s);
    return *v;
  }
  Points points() {
    const std::string& s = next();
    const auto v = Points::parse(s);
    if (!v) bad(s);
    return *v;
  }
  std::optional<Points> opt_points() {
    if (peek().empty()) return skip(), std::nullopt;
    return points();
  }
  std::optional<double> opt_real() {
    const std::string& s = next();
    if (s.empty()) return std::nullopt;
    const auto v = text::parse_double(s);
    if (!v) bad(s);
    return v;
  }
  bool flag() {
    const std::string& s = next();
    if (s != "0" && s != "1") bad(s);
    return s == "1";
  }
  std::string str() { return next(); }
  std::optional<Point> position() {
    const auto x = opt_real();
    const auto y = opt_real();
    if (x.has_value() != y.has_value()) fail(ErrorCode::kParse, "line " + std::to_string(line_) + ": half-empty position");
    return x ? std::optional<Point>(Point{*x, *y}) : std::nullopt;
  }

 private:
  const std::string& peek() const { return f_.at(i_); }
  void skip() { ++i_; }
  const std::string& next() { return f_.at(i_++); }
  [[noreturn]] void bad(const std::string& s) const {
    fail(ErrorCode::kParse, "line " + std::to_string(line_) + ": invalid value '" + s + "' in column " + std::to_string(i_));
  }

  const std::vector<std::string>& f_;
  std::size_t line_;
  std::size_t i_ = 0;
};

}  // namespace

std::string enriched_header(Game game) { return std::string(game == Game::kPong ? kPongHeader : kPacmanHeader); }

std::string enriched_file_name(std::uint32_t env) { return "enriched_env" + std::to_string(env) + ".csv"; }

std::string format_enriched_row(const EnrichedRecord& e, Game game) {
  const auto& r = e.raw;
  std::vector<std::string> f;
  f.reserve(column_count(game));
  const auto pos = [&](std::size_t i) { return i < e.positions.size() ? e.positions[i] : std::nullopt; };
  if (game == Game::kMsPacman) {
    f = {std::to_string(r.step),       std::to_string(r.env),       std::to_string(e.game_number),
         std::to_string(e.life_number), std::to_string(e.life_step), std::to_string(e.game_step),
         std::to_string(r.action),     text::csv_field(r.action_name), r.reward.to_string(),
         e.life_reward.to_string(),    e.game_reward.to_string(),   e.total_reward.to_string(),
         std::to_string(r.lives),      flag(e.life_lost),           flag(e.end_of_game),
         opt(e.reward_at_end_of_game)};
    for (std::size_t i = 0; i < 5; ++i) push_position(f, pos(i));
    for (std::size_t g = 0; g < kGhostCount; ++g) f.push_back(g < e.ghost_distances.size() ? opt(e.ghost_distances[g]) : "");
    for (std::size_t p = 0; p < kPillCount; ++p) f.push_back(flag(p < e.pill_eaten.size() && e.pill_eaten[p]));
    for (std::size_t p = 0; p < kPillCount; ++p) f.push_back(p < e.pill_distances.size() ? opt(e.pill_distances[p]) : "");
    f.push_back(flag(e.frightened));
  } else {
    f = {std::to_string(r.step),     std::to_string(r.env),     std::to_string(e.game_number),
         std::to_string(e.game_step), std::to_string(r.action), text::csv_field(r.action_name),
         r.reward.to_string(),       e.game_reward.to_string(), e.total_reward.to_string(),
         flag(e.end_of_game)};
    for (std::size_t i = 0; i < 3; ++i) push_position(f, pos(i));
    f.push_back(opt(e.dist_paddle_ball));
    f.push_back(flag(e.miss));
  }
  return text::join_csv(f);
}

void write_enriched_csv(const std::filesystem::path& path, Game game, std::span<const EnrichedRecord> records) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::kIo, "write error: " + path.string());
    out << enriched_header(game) << '\n';
    for (const auto& e : records) out << format_enriched_row(e, game) << '\n';
    out.flush();
    if (!out) fail(ErrorCode::kIo, "write error: " + path.string());
  }
  const int fd = ::open(path.c_str(), O_RDONLY);
  if (fd < 0 || ::fsync(fd) != 0) {
    if (fd >= 0) ::close(fd);
    fail(ErrorCode::kIo, "cannot sync " + path.string());
  }
  ::close(fd);
}

EnrichedTable read_enriched_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path.string());
  EnrichedTable table;
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::kParse, "line 1: empty file");
  if (line == kPacmanHeader)
    table.game = Game::kMsPacman;
  else if (line == kPongHeader)
    table.game = Game::kPong;
  else
    fail(ErrorCode::kParse, "line 1: not an enriched dataset header");
  const std::size_t columns = column_count(table.game);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = text::split_csv(line);
    if (!fields || fields->size() != columns)
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " + std::to_string(columns) + " fields");
    RowReader rd(*fields, line_no);
    EnrichedRecord e;
    e.raw.step = rd.uint();
    e.raw.env = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
    e.game_number = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
    if (table.game == Game::kMsPacman) {
      e.life_number = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
      e.life_step = rd.uint();
      e.game_step = rd.uint();
      e.raw.action = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
      e.raw.action_name = rd.str();
      e.raw.reward = rd.points();
      e.life_reward = rd.points();
      e.game_reward = rd.points();
      e.total_reward = rd.points();
      e.raw.lives = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
      e.life_lost = rd.flag();
      e.end_of_game = rd.flag();
      e.raw.done = e.end_of_game;
      e.reward_at_end_of_game = rd.opt_points();
      for (int i = 0; i < 5; ++i) e.positions.push_back(rd.position());
      for (std::size_t g = 0; g < kGhostCount; ++g) e.ghost_distances.push_back(rd.opt_real());
      for (std::size_t p = 0; p < kPillCount; ++p) e.pill_eaten.push_back(rd.flag());
      for (std::size_t p = 0; p < kPillCount; ++p) e.pill_distances.push_back(rd.opt_real());
      e.frightened = rd.flag();
    } else {
      e.game_step = rd.uint();
      e.life_step = e.game_step;
      e.raw.action = static_cast<std::uint32_t>(rd.uint(UINT32_MAX));
      e.raw.action_name = rd.str();
      e.raw.reward = rd.points();
      e.game_reward = rd.points();
      e.life_reward = e.game_reward;
      e.total_reward = rd.points();
      e.end_of_game = rd.flag();
      e.raw.done = e.end_of_game;
      if (e.end_of_game) e.reward_at_end_of_game = e.game_reward;
      for (int i = 0; i < 3; ++i) e.positions.push_back(rd.position());
      e.dist_paddle_ball = rd.opt_real();
      e.miss = rd.flag();
    }
    table.records.push_back(std::move(e));
  }
  return table;
}

}  // namespace scraper
