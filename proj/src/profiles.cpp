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

#include "profiles.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

using nlohmann::ordered_json;

namespace scraper {

namespace detail {
// Generated at configure time from data/profiles/*.json.
extern const std::string_view kMsPacmanProfileJson;
extern const std::string_view kPongProfileJson;
}  // namespace detail

std::optional<std::size_t> GameProfile::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i].name == name) return i;
  return std::nullopt;
}

const EventRule* GameProfile::rule(EventEffect effect) const {
  for (const auto& r : event_rules)
    if (r.effect == effect) return &r;
  return nullptr;
}

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorCode::kSchema, "profile: " + msg); }

const std::set<std::string> kRequiredKeys = {"game",           "crop",       "characters", "frightened_range",
                                             "static_objects", "event_rules", "min_pixels", "pill_radius"};
const std::set<std::string> kOptionalKeys = {"frame_width", "frame_height", "provenance"};

int as_int(const ordered_json& v, const std::string& what) {
  if (!v.is_number_integer()) schema(what + " must be an integer");
  return v.get<int>();
}

double as_real(const ordered_json& v, const std::string& what) {
  if (!v.is_number()) schema(what + " must be a number");
  return v.get<double>();
}

ColorRange as_range(const ordered_json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 6) schema(what + " must be [r_min,r_max,g_min,g_max,b_min,b_max]");
  int b[6];
  for (std::size_t i = 0; i < 6; ++i) b[i] = as_int(v[i], what);
  try {
    return ColorRange::make(b[0], b[1], b[2], b[3], b[4], b[5]);
  } catch (const Error& e) {
    schema(what + ": " + e.what());
  }
}

ordered_json range_json(const ColorRange& c) {
  return ordered_json::array({c.r_min, c.r_max, c.g_min, c.g_max, c.b_min, c.b_max});
}

Points as_points(const ordered_json& v, const std::string& what) {
  if (!v.is_number()) schema(what + " must be a number");
  const auto p = Points::parse(v.dump());
  if (!p) schema(what + " is not an exact decimal");
  return *p;
}

}  // namespace

GameProfile parse_profile(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema("top level must be an object");
  for (const auto& k : kRequiredKeys)
    if (!j.contains(k)) schema("missing key '" + k + "'");
  for (const auto& [k, _] : j.items())
    if (!kRequiredKeys.count(k) && !kOptionalKeys.count(k)) schema("unknown key '" + k + "'");

  GameProfile p;
  if (!j["game"].is_string()) schema("'game' must be a string");
  const auto game = parse_game(j["game"].get<std::string>());
  if (!game) schema("unknown game '" + j["game"].get<std::string>() + "'");
  p.game = *game;
  if (j.contains("frame_width")) p.frame_width = as_int(j["frame_width"], "frame_width");
  if (j.contains("frame_height")) p.frame_height = as_int(j["frame_height"], "frame_height");
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string()) schema("'provenance' must be a string");
    p.provenance = j["provenance"].get<std::string>();
  }

  const auto& crop = j["crop"];
  if (!crop.is_object()) schema("'crop' must be an object with x0,y0,x1,y1");
  for (const char* k : {"x0", "y0", "x1", "y1"})
    if (!crop.contains(k)) schema(std::string("crop missing '") + k + "'");
  p.crop = {as_int(crop["x0"], "crop.x0"), as_int(crop["y0"], "crop.y0"), as_int(crop["x1"], "crop.x1"),
            as_int(crop["y1"], "crop.y1")};

  if (!j["characters"].is_object()) schema("'characters' must be an object of name -> range");
  for (const auto& [name, range] : j["characters"].items())
    p.characters.push_back({name, as_range(range, "characters." + name)});

  if (!j["frightened_range"].is_null()) p.frightened_range = as_range(j["frightened_range"], "frightened_range");

  if (!j["static_objects"].is_array()) schema("'static_objects' must be an array");
  for (const auto& o : j["static_objects"]) {
    if (!o.is_object() || !o.contains("name") || !o.contains("x") || !o.contains("y") || !o["name"].is_string())
      schema("static object needs name, x, y");
    StaticObject so;
    so.name = o["name"].get<std::string>();
    so.kind = o.contains("kind") && o["kind"].is_string() ? o["kind"].get<std::string>() : so.name;
    so.position = {as_real(o["x"], so.name + ".x"), as_real(o["y"], so.name + ".y")};
    p.static_objects.push_back(std::move(so));
  }

  if (!j["event_rules"].is_array()) schema("'event_rules' must be an array");
  for (const auto& r : j["event_rules"]) {
    if (!r.is_object() || !r.contains("name") || !r.contains("trigger_reward") || !r.contains("effect"))
      schema("event rule needs name, trigger_reward, effect");
    EventRule rule;
    if (!r["name"].is_string()) schema("rule name must be a string");
    rule.name = r["name"].get<std::string>();
    rule.trigger_reward = as_points(r["trigger_reward"], rule.name + ".trigger_reward");
    const std::string effect = r["effect"].is_string() ? r["effect"].get<std::string>() : "";
    if (effect == "mark_pill_eaten")
      rule.effect = EventEffect::kMarkPillEaten;
    else if (effect == "record_miss")
      rule.effect = EventEffect::kRecordMiss;
    else
      schema("rule '" + rule.name + "' has unknown effect '" + effect + "'");
    if (r.contains("proximity_target") && !r["proximity_target"].is_null()) {
      if (!r["proximity_target"].is_string()) schema("proximity_target must be a string");
      rule.proximity_target = r["proximity_target"].get<std::string>();
    }
    if (r.contains("proximity_radius") && !r["proximity_radius"].is_null())
      rule.proximity_radius = as_real(r["proximity_radius"], rule.name + ".proximity_radius");
    p.event_rules.push_back(std::move(rule));
  }

  p.min_pixels = as_int(j["min_pixels"], "min_pixels");
  if (!j["pill_radius"].is_null()) p.pill_radius = as_real(j["pill_radius"], "pill_radius");
  check_profile(p);
  return p;
}

GameProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read profile " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str());
}

std::string profile_to_json(const GameProfile& p) {
  ordered_json j;
  j["game"] = std::string(to_string(p.game));
  if (!p.provenance.empty()) j["provenance"] = p.provenance;
  j["frame_width"] = p.frame_width;
  j["frame_height"] = p.frame_height;
  j["crop"] = {{"x0", p.crop.x0}, {"y0", p.crop.y0}, {"x1", p.crop.x1}, {"y1", p.crop.y1}};
  j["characters"] = ordered_json::object();
  for (const auto& c : p.characters) j["characters"][c.name] = range_json(c.range);
  j["frightened_range"] = p.frightened_range ? range_json(*p.frightened_range) : ordered_json(nullptr);
  j["static_objects"] = ordered_json::array();
  for (const auto& o : p.static_objects)
    j["static_objects"].push_back({{"name", o.name}, {"kind", o.kind}, {"x", o.position.x}, {"y", o.position.y}});
  j["event_rules"] = ordered_json::array();
  for (const auto& r : p.event_rules) {
    ordered_json jr;
    jr["name"] = r.name;
    jr["trigger_reward"] = ordered_json::parse(r.trigger_reward.to_string());
    if (r.proximity_target) jr["proximity_target"] = *r.proximity_target;
    if (r.proximity_radius) jr["proximity_radius"] = *r.proximity_radius;
    jr["effect"] = r.effect == EventEffect::kMarkPillEaten ? "mark_pill_eaten" : "record_miss";
    j["event_rules"].push_back(std::move(jr));
  }
  j["min_pixels"] = p.min_pixels;
  j["pill_radius"] = p.pill_radius ? ordered_json(*p.pill_radius) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

void check_profile(const GameProfile& p) {
  if (p.frame_width <= 0 || p.frame_height <= 0) schema("frame dimensions must be positive");
  const Rect& c = p.crop;
  if (c.x0 < 0 || c.y0 < 0 || c.x0 > c.x1 || c.y0 > c.y1 || c.x1 >= p.frame_width || c.y1 >= p.frame_height)
    schema("crop must lie inside the frame");
  if (p.min_pixels <= 0) schema("min_pixels must be positive");
  std::set<std::string> seen;
  for (const auto& ch : p.characters)
    if (!seen.insert(ch.name).second) schema("duplicate character '" + ch.name + "'");
  // A pixel may belong to at most one tracked color.
  for (std::size_t i = 0; i < p.characters.size(); ++i) {
    for (std::size_t k = i + 1; k < p.characters.size(); ++k)
      if (p.characters[i].range.overlaps(p.characters[k].range))
        schema("color ranges of '" + p.characters[i].name + "' and '" + p.characters[k].name + "' overlap");
    if (p.frightened_range && p.characters[i].range.overlaps(*p.frightened_range))
      schema("color range of '" + p.characters[i].name + "' overlaps frightened_range");
  }

  for (const auto& r : p.event_rules) {
    const bool proximity = r.proximity_target.has_value() || r.proximity_radius.has_value();
    if (r.effect == EventEffect::kMarkPillEaten && !(r.proximity_target && r.proximity_radius))
      schema("rule '" + r.name + "': mark_pill_eaten requires proximity_target and proximity_radius");
    if (r.effect == EventEffect::kRecordMiss && proximity)
      schema("rule '" + r.name + "': record_miss takes no proximity fields");
    if (r.proximity_radius && *r.proximity_radius <= 0) schema("rule '" + r.name + "': proximity_radius must be positive");
  }
  for (const auto& o : p.static_objects)
    if (!c.contains(o.position.x, o.position.y)) schema("static object '" + o.name + "' lies outside the crop");

  auto require = [&](std::initializer_list<std::string_view> names) {
    if (p.characters.size() != names.size())
      schema(std::string(to_string(p.game)) + " needs exactly " + std::to_string(names.size()) + " characters");
    for (auto n : names)
      if (!p.index_of(n)) schema("missing character '" + std::string(n) + "'");
  };
  if (p.game == Game::kMsPacman) {
    require({names::kPacman, "ghost1", "ghost2", "ghost3", "ghost4"});
    if (!p.frightened_range) schema("ms_pacman needs frightened_range");
    if (p.static_objects.size() != 4) schema("ms_pacman needs exactly 4 power pills");
    if (!p.pill_radius || *p.pill_radius <= 0) schema("ms_pacman needs a positive pill_radius");
    const EventRule* rule = p.rule(EventEffect::kMarkPillEaten);
    if (!rule) schema("ms_pacman needs a mark_pill_eaten rule");
    for (const auto& o : p.static_objects)
      if (o.kind != *rule->proximity_target) schema("static object '" + o.name + "' is not a " + *rule->proximity_target);
    for (std::size_t i = 0; i < p.static_objects.size(); ++i)
      for (std::size_t k = i + 1; k < p.static_objects.size(); ++k)
        if (distance(p.static_objects[i].position, p.static_objects[k].position) <= 2 * *rule->proximity_radius)
          schema("pills '" + p.static_objects[i].name + "' and '" + p.static_objects[k].name +
                 "' are closer than twice the pill radius");
  } else {
    require({names::kPaddleLeft, names::kPaddleRight, names::kBall});
    if (p.frightened_range) schema("pong takes no frightened_range");
    if (!p.static_objects.empty()) schema("pong takes no static objects");
    if (!p.rule(EventEffect::kRecordMiss)) schema("pong needs a record_miss rule");
  }
}

GameProfile mspacman_profile() {
  static const GameProfile p = parse_profile(detail::kMsPacmanProfileJson);
  return p;
}

GameProfile pong_profile() {
  static const GameProfile p = parse_profile(detail::kPongProfileJson);
  return p;
}

GameProfile builtin_profile(Game game) { return game == Game::kPong ? pong_profile() : mspacman_profile(); }

ColorRange calibrate_color(const RgbImage& frame, int x, int y, int tolerance) {
  if (x < 0 || y < 0 || x >= frame.width() || y >= frame.height())
    fail(ErrorCode::kGeometry, "calibration point (" + std::to_string(x) + "," + std::to_string(y) + ") outside " +
                                   std::to_string(frame.width()) + "x" + std::to_string(frame.height()) + " frame");
  if (tolerance < 0) fail(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  const Rgb c = frame.at(x, y);
  auto lo = [&](int v) { return std::max(0, v - tolerance); };
  auto hi = [&](int v) { return std::min(255, v + tolerance); };
  return ColorRange::make(lo(c.r), hi(c.r), lo(c.g), hi(c.g), lo(c.b), hi(c.b));
}

}  // namespace scraper
