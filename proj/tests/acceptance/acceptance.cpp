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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enrichment.hpp"
#include "locate.hpp"
#include "synth.hpp"

namespace fs = std::filesystem;
using namespace scraper;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a check.
class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    pass_ = false;
    if (++failures_ <= 3) problems_ += (problems_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    if (pass_) return {true, summary};
    return {false, summary + " | " + std::to_string(failures_) + " problem(s): " + problems_};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string problems_;
};

class Workspace {
 public:
  Workspace() {
    std::string tmpl = (fs::temp_directory_path() / "scraper_acceptance_XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    root_ = tmpl;
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(root_, ec);
  }
  fs::path dir(const std::string& name) const { return root_ / name; }

 private:
  fs::path root_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int precision = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  return os.str();
}

// Script entries of one env, in order.
std::vector<std::size_t> entries_of(const synth::EpisodeScript& script, std::uint32_t env) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < script.steps.size(); ++i)
    if (script.steps[i].env == env) out.push_back(i);
  return out;
}

std::vector<EnrichedRecord> expand_and_read(const synth::EpisodeScript& script, const fs::path& dir, Check& c,
                                            Report* findings = nullptr) {
  synth::script_episode(script, dir, builtin_profile(script.game));
  ExpandResult r = expand(dir, {.workers = 1});
  c.require(!r.refused, "expand refused");
  if (findings) *findings = r.report;
  std::vector<EnrichedRecord> all;
  for (std::uint32_t env = 0; env < script.num_envs; ++env) {
    auto t = read_enriched_csv(dir / enriched_file_name(env));
    all.insert(all.end(), t.records.begin(), t.records.end());
  }
  return all;
}

Outcome localization() {
  const GameProfile profile = mspacman_profile();
  synth::Rng rng(1001);
  Check c;
  double worst = 0;
  std::size_t detected = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto frame = synth::render_frame(synth::random_scene(profile, rng), profile);
    const DetectionSet got = locate_characters(frame.image, profile);
    for (std::size_t k = 0; k < profile.characters.size(); ++k) {
      const auto& have = got.characters[k].position;
      const auto& want = frame.oracle.characters[k].position;
      if (!have || !want) {
        c.require(false, "frame " + std::to_string(i) + ": " + profile.characters[k].name + " not detected");
        continue;
      }
      ++detected;
      const double d = distance(*have, *want);
      worst = std::max(worst, d);
      c.require(d < 1.0, "frame " + std::to_string(i) + ": " + profile.characters[k].name + " off by " + fmt(d));
    }
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < 10.0, "took " + fmt(elapsed) + " s");
  return c.done("1000 frames, " + std::to_string(detected) + "/5000 detections, max error " + fmt(worst, 6) +
                " px, " + fmt(elapsed) + " s single worker (render+locate)");
}

Outcome frightened_fallback() {
  const GameProfile profile = mspacman_profile();
  synth::Rng rng(2002);
  Check c;
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const auto frame = synth::render_frame(synth::random_scene(profile, rng, true), profile);
    const DetectionSet got = locate_characters(frame.image, profile);
    const std::string tag = "frame " + std::to_string(i);
    c.require(got.frightened, tag + ": frightened=false");
    std::vector<Point> fallback, truth;
    for (std::size_t k = 0; k < profile.characters.size(); ++k) {
      if (profile.characters[k].name == names::kPacman) continue;
      if (got.characters[k].provenance == Provenance::kFallbackComponent && got.characters[k].position)
        fallback.push_back(*got.characters[k].position);
      if (frame.oracle.characters[k].position) truth.push_back(*frame.oracle.characters[k].position);
    }
    c.require(fallback.size() == 4, tag + ": " + std::to_string(fallback.size()) + " fallback positions");
    // Set match: greedy nearest pairing is exact here because ghosts are at
    // least two pixels apart and errors are far below that.
    std::vector<bool> used(fallback.size(), false);
    for (const Point& t : truth) {
      double best = 1e9;
      std::size_t pick = fallback.size();
      for (std::size_t f = 0; f < fallback.size(); ++f)
        if (!used[f] && distance(fallback[f], t) < best) best = distance(fallback[f], t), pick = f;
      if (pick < fallback.size()) used[pick] = true;
      worst = std::max(worst, best);
      c.require(best < 1.0, tag + ": unmatched ghost (" + fmt(best) + " px)");
    }
  }
  return c.done("200 frightened frames, max error " + fmt(worst, 6) + " px");
}

Outcome ledger_identity(const fs::path& dir) {
  Check c;
  const auto script = *synth::scenario("mspacman-3game");
  const auto rows = expand_and_read(script, dir, c);
  c.require(rows.size() == script.steps.size(), "row count");
  std::map<std::uint32_t, Points> scripted_totals;
  for (const auto& s : script.steps) scripted_totals[s.game_number] += s.reward;
  Points life, game, total;
  std::size_t ends = 0;
  for (std::size_t i = 0; i < rows.size() && i < script.steps.size(); ++i) {
    const auto& s = script.steps[i];
    const auto& e = rows[i];
    const std::string tag = "row " + std::to_string(i);
    c.require(e.game_number == s.game_number && e.life_number == s.life_number, tag + ": segmentation");
    const bool new_game = i == 0 || s.game_number != script.steps[i - 1].game_number;
    const bool new_life = new_game || s.life_number != script.steps[i - 1].life_number;
    if (new_game) game = {};
    if (new_life) life = {};
    life += s.reward;
    game += s.reward;
    total += s.reward;
    c.require(e.step_reward() == s.reward, tag + ": step_reward");
    c.require(e.life_reward == life, tag + ": life_reward " + e.life_reward.to_string() + " != " + life.to_string());
    c.require(e.game_reward == game, tag + ": game_reward");
    c.require(e.total_reward == total, tag + ": total_reward");
    if (s.done) {
      ++ends;
      c.require(e.reward_at_end_of_game == scripted_totals[s.game_number], tag + ": end-of-game reward");
    } else {
      c.require(!e.reward_at_end_of_game, tag + ": stray end-of-game reward");
    }
  }
  c.require(ends == 3, std::to_string(ends) + " game ends");
  std::string totals;
  for (const auto& [g, t] : scripted_totals) totals += (totals.empty() ? "" : ",") + t.to_string();
  return c.done(std::to_string(rows.size()) + " rows, 3 games x 3 lives, game totals [" + totals + "]");
}

Outcome pill_inference(const fs::path& dir) {
  Check c;
  const auto script = *synth::scenario("mspacman-3game");
  Report findings;
  const auto rows = expand_and_read(script, dir, c, &findings);
  std::size_t flips = 0, scripted = 0, adversarial = 0;
  for (std::size_t i = 0; i < rows.size() && i < script.steps.size(); ++i) {
    const auto& s = script.steps[i];
    const auto& e = rows[i];
    const std::string tag = "step " + std::to_string(e.raw.step);
    const bool game_start = i == 0 || s.game_number != script.steps[i - 1].game_number;
    if (s.eats_pill) ++scripted;
    for (std::size_t p = 0; p < kPillCount; ++p) {
      const bool before = !game_start && rows[i - 1].pill_eaten[p];
      if (game_start) c.require(!e.pill_eaten[p], tag + ": pill set at game start");
      c.require(!before || e.pill_eaten[p], tag + ": pill " + std::to_string(p + 1) + " un-ate");
      const bool flip = !before && e.pill_eaten[p];
      flips += flip;
      c.require(flip == (s.eats_pill == p), tag + ": pill " + std::to_string(p + 1) + " flip mismatch");
    }
    if (s.reward == Points::whole(50) && !s.eats_pill) {
      ++adversarial;
      const bool flagged = std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
        return f.env == e.raw.env && f.step == e.raw.step && f.message.find("power_pill") != std::string::npos;
      });
      c.require(flagged, tag + ": adversarial reward without finding");
    }
  }
  c.require(scripted == 12 && flips == 12, std::to_string(flips) + " flips for " + std::to_string(scripted) +
                                               " scripted crossings");
  c.require(adversarial == 3, std::to_string(adversarial) + " adversarial steps");
  return c.done(std::to_string(flips) + "/" + std::to_string(scripted) + " scripted flips, " +
                std::to_string(adversarial) + " adversarial +50 steps flagged, no extra flips");
}

Outcome pong_misses(const fs::path& dir) {
  Check c;
  const auto script = *synth::scenario("pong");
  const auto rows = expand_and_read(script, dir, c);
  Report ignored;
  const auto misses = collect_misses(rows, pong_profile(), ignored);
  std::map<std::uint64_t, const synth::ScriptStep*> scripted;
  std::map<std::uint32_t, std::size_t> per_game_scripted, per_game_found;
  std::size_t stale = 0;
  for (std::size_t i = 0; i < script.steps.size(); ++i)
    if (script.steps[i].miss) {
      scripted[script.step_index[i]] = &script.steps[i];
      ++per_game_scripted[script.steps[i].game_number];
    }
  double worst = 0;
  for (const auto& m : misses) {
    ++per_game_found[m.game_number];
    const auto it = scripted.find(m.step);
    if (it == scripted.end()) {
      c.require(false, "unexpected miss at step " + std::to_string(m.step));
      continue;
    }
    stale += m.stale_ball;
    c.require(m.stale_ball == it->second->stale_ball, "stale flag at step " + std::to_string(m.step));
    if (!m.distance) {
      c.require(false, "no distance at step " + std::to_string(m.step));
      continue;
    }
    const double err = std::abs(*m.distance - *it->second->miss_distance);
    worst = std::max(worst, err);
    c.require(err < 1.0, "distance off by " + fmt(err) + " at step " + std::to_string(m.step));
  }
  c.require(misses.size() == scripted.size(), std::to_string(misses.size()) + " events for " +
                                                  std::to_string(scripted.size()) + " scripted misses");
  c.require(per_game_found == per_game_scripted, "per-game miss counts differ");
  std::string per_game;
  for (const auto& [g, n] : per_game_found) per_game += (per_game.empty() ? "" : ",") + std::to_string(n);
  return c.done(std::to_string(misses.size()) + " miss events (per game [" + per_game + "]), " +
                std::to_string(stale) + " with stale ball, max gap error " + fmt(worst, 6) + " px");
}

Outcome demux_round_trip(const fs::path& dir) {
  Check c;
  const auto script = *synth::scenario("mspacman-4env");
  const auto out = synth::script_episode(script, dir, mspacman_profile());
  c.require(!expand(dir, {.workers = 4}).refused, "expand refused");
  const RawLog raw = read_raw_log(dir);
  std::vector<StepRecord> merged;
  std::set<std::uint32_t> games_seen;
  for (std::uint32_t env = 0; env < script.num_envs; ++env) {
    const auto t = read_enriched_csv(dir / enriched_file_name(env));
    const auto idx = entries_of(script, env);
    c.require(t.records.size() == idx.size(), "env " + std::to_string(env) + " row count");
    for (std::size_t k = 0; k < t.records.size() && k < idx.size(); ++k) {
      const auto& e = t.records[k];
      const auto& s = script.steps[idx[k]];
      const std::string tag = "env " + std::to_string(env) + " row " + std::to_string(k);
      c.require(e.raw.env == env, tag + ": env");
      c.require(e.game_number == s.game_number && e.life_number == s.life_number, tag + ": counters");
      c.require(e.game_step == (k == 0 || s.game_number != script.steps[idx[k - 1]].game_number
                                    ? 1
                                    : t.records[k - 1].game_step + 1),
                tag + ": game_step");
      merged.push_back(e.raw);
    }
    games_seen.insert(t.records.empty() ? 0 : t.records.back().game_number);
    c.require(slurp(dir / enriched_file_name(env)) == slurp(out.expected[env]),
              "env " + std::to_string(env) + " differs from oracle file");
  }
  std::stable_sort(merged.begin(), merged.end(), [](const StepRecord& a, const StepRecord& b) {
    return std::tie(a.step, a.env) < std::tie(b.step, b.env);
  });
  // Frame paths are not part of the enriched output; every other raw field is.
  std::vector<StepRecord> expected = raw.records;
  for (auto& r : expected) r.frame.clear();
  c.require(merged == expected, "merged per-env rows do not reproduce the raw log");
  c.require(games_seen.size() > 1, "envs do not have independent game counts");
  return c.done("4 envs, " + std::to_string(raw.records.size()) + " raw rows; per-env counters match script, merge " +
                "reproduces steps.csv order");
}

bool has_column(const std::string& header, const std::string& col) {
  return ("," + header + ",").find("," + col + ",") != std::string::npos;
}

Outcome schema_census() {
  Check c;
  // Each data-census row and the columns that carry it.
  const std::vector<std::pair<std::string, std::vector<std::string>>> pacman = {
      {"step number", {"step"}},
      {"action name", {"action_name"}},
      {"action number", {"action"}},
      {"step reward", {"step_reward"}},
      {"lives", {"lives"}},
      {"characters' x-coordinates", {"pacman_x", "ghost1_x", "ghost2_x", "ghost3_x", "ghost4_x"}},
      {"characters' y-coordinates", {"pacman_y", "ghost1_y", "ghost2_y", "ghost3_y", "ghost4_y"}},
      {"distances to ghosts", {"dist_ghost1", "dist_ghost2", "dist_ghost3", "dist_ghost4"}},
      {"pill eaten statuses", {"pill1_eaten", "pill2_eaten", "pill3_eaten", "pill4_eaten"}},
      {"distance to pills", {"dist_pill1", "dist_pill2", "dist_pill3", "dist_pill4"}},
      {"current life rewards", {"life_reward"}},
      {"current game rewards", {"game_reward"}},
      {"current life step", {"life_step"}},
      {"current game step", {"game_step"}},
      {"game number", {"game_number"}},
      {"total reward", {"total_reward"}},
      {"life number", {"life_number"}},
      {"end of game flag", {"end_of_game"}},
      {"reward at end of game", {"reward_at_end_of_game"}},
  };
  const std::vector<std::pair<std::string, std::vector<std::string>>> pong = {
      {"step number", {"step"}},
      {"action name", {"action_name"}},
      {"action number", {"action"}},
      {"game reward", {"game_reward"}},
      {"ball x-coordinate", {"ball_x"}},
      {"ball y-coordinate", {"ball_y"}},
      {"paddles' x-coordinates", {"paddle_left_x", "paddle_right_x"}},
      {"paddles' y-coordinates", {"paddle_left_y", "paddle_right_y"}},
      {"paddle to ball distance", {"dist_paddle_ball"}},
      {"step reward", {"step_reward"}},
  };
  // Check the headers of files actually produced by expand.
  Workspace ws;
  std::map<Game, std::string> headers;
  for (const char* name : {"mspacman-truncated", "pong"}) {
    const auto script = *synth::scenario(name);
    const fs::path dir = ws.dir(name);
    synth::script_episode(script, dir, builtin_profile(script.game));
    c.require(!expand(dir, {}).refused, std::string(name) + ": expand refused");
    std::ifstream in(dir / enriched_file_name(0));
    std::getline(in, headers[script.game]);
  }
  std::size_t rows = 0;
  for (const auto& [game, census] : {std::pair{Game::kMsPacman, pacman}, std::pair{Game::kPong, pong}})
    for (const auto& [row, cols] : census) {
      ++rows;
      for (const auto& col : cols)
        c.require(has_column(headers[game], col), std::string(to_string(game)) + " '" + row + "' lacks " + col);
    }
  return c.done(std::to_string(pacman.size()) + " Ms. Pacman + " + std::to_string(pong.size()) +
                " Pong census rows covered by expand output headers");
}

Outcome determinism(const Workspace& ws) {
  Check c;
  std::size_t files = 0;
  for (const char* name : {"mspacman-4env", "pong-2env", "mspacman-truncated"}) {
    const auto script = *synth::scenario(name);
    const fs::path run = ws.dir(std::string("det-") + name);
    synth::script_episode(script, run, builtin_profile(script.game));
    const fs::path one = run / "w1", eight = run / "w8";
    c.require(!expand(run, {.workers = 1, .out_dir = one}).refused, std::string(name) + ": refused");
    c.require(!expand(run, {.workers = 8, .out_dir = eight}).refused, std::string(name) + ": refused");
    std::vector<std::string> outputs = {"findings.txt"};
    for (std::uint32_t e = 0; e < script.num_envs; ++e) outputs.push_back(enriched_file_name(e));
    for (const auto& f : outputs) {
      ++files;
      c.require(fs::exists(one / f) && slurp(one / f) == slurp(eight / f), std::string(name) + "/" + f + " differs");
    }
  }
  return c.done(std::to_string(files) + " output files byte-identical between 1 and 8 workers");
}

Outcome throughput(const fs::path& dir) {
  Check c;
  const auto script = *synth::scenario("throughput");
  synth::script_episode(script, dir, mspacman_profile());
  const auto t0 = std::chrono::steady_clock::now();
  const ExpandResult r = expand(dir, {.workers = 1});
  const double elapsed = seconds_since(t0);
  c.require(!r.refused, "expand refused");
  c.require(r.records == 10000, std::to_string(r.records) + " records");
  const double rate = static_cast<double>(r.records) / elapsed;
  c.require(rate >= 100.0, fmt(rate, 1) + " frames/s");
  return c.done(std::to_string(r.records) + " frames of 160x210 in " + fmt(elapsed) + " s = " + fmt(rate, 1) +
                " frames/s, single worker");
}

}  // namespace

int main() {
  Workspace ws;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"localization exactness", localization},
      {"frightened fallback", frightened_fallback},
      {"ledger identity", [&] { return ledger_identity(ws.dir("ledger")); }},
      {"pill inference", [&] { return pill_inference(ws.dir("pills")); }},
      {"pong miss accounting", [&] { return pong_misses(ws.dir("pong")); }},
      {"demux/merge round-trip", [&] { return demux_round_trip(ws.dir("demux")); }},
      {"schema census", schema_census},
      {"determinism", [&] { return determinism(ws); }},
      {"throughput", [&] { return throughput(ws.dir("throughput")); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
