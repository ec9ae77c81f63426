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
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "text.hpp"

namespace scraper {

std::vector<EpisodeSummary> summarize_games(std::span<const EnrichedRecord> records) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, EpisodeSummary> games;
  for (const EnrichedRecord& e : records) {
    auto [it, inserted] = games.try_emplace({e.raw.env, e.game_number});
    EpisodeSummary& s = it->second;
    if (inserted) {
      s.env = e.raw.env;
      s.game_number = e.game_number;
    }
    s.total_game_reward += e.raw.reward;
    ++s.total_game_steps;
    s.end_step = e.raw.step;
    s.complete = e.end_of_game;
    if (s.per_life.empty() || s.per_life.back().life_number != e.life_number)
      s.per_life.push_back({e.life_number, {}, 0});
    s.per_life.back().life_reward += e.raw.reward;
    ++s.per_life.back().life_steps;
  }
  std::vector<EpisodeSummary> out;
  out.reserve(games.size());
  for (auto& [_, s] : games) {
    s.lives_used = static_cast<std::uint32_t>(s.per_life.size());
    out.push_back(std::move(s));
  }
  return out;
}

Extremes select_extremes(std::span<const EpisodeSummary> summaries, std::size_t k) {
  std::vector<EpisodeSummary> ranked;
  for (const auto& s : summaries)
    if (s.complete) ranked.push_back(s);
  const auto earlier = [](const EpisodeSummary& a, const EpisodeSummary& b) {
    return std::tie(a.end_step, a.env) < std::tie(b.end_step, b.env);
  };
  std::stable_sort(ranked.begin(), ranked.end(), [&](const EpisodeSummary& a, const EpisodeSummary& b) {
    if (a.total_game_reward != b.total_game_reward) return a.total_game_reward > b.total_game_reward;
    return earlier(a, b);
  });
  Extremes out;
  const std::size_t take = std::min(k, ranked.size());
  out.best.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take));
  out.worst.assign(ranked.end() - static_cast<std::ptrdiff_t>(take), ranked.end());
  std::stable_sort(out.worst.begin(), out.worst.end(), [&](const EpisodeSummary& a, const EpisodeSummary& b) {
    if (a.total_game_reward != b.total_game_reward) return a.total_game_reward < b.total_game_reward;
    return earlier(a, b);
  });
  return out;
}

namespace {

struct KindName {
  PlotKind kind;
  std::string_view cli;
  std::string_view data;
};
constexpr KindName kKinds[] = {
    {PlotKind::kGameSummary, "game-summary", "game_summary"},
    {PlotKind::kPerEnvQuality, "per-env-quality", "per_env_quality"},
    {PlotKind::kBestWorst, "best-worst", "best_worst"},
    {PlotKind::kMissDistance, "miss-distance", "miss_distance"},
    {PlotKind::kScoreCurve, "score-curve", "score_curve"},
};

// Complete games in the order they finished.
std::vector<EpisodeSummary> chronological(std::vector<EpisodeSummary> games) {
  std::erase_if(games, [](const EpisodeSummary& s) { return !s.complete; });
  std::stable_sort(games.begin(), games.end(), [](const EpisodeSummary& a, const EpisodeSummary& b) {
    return std::tie(a.end_step, a.env) < std::tie(b.end_step, b.env);
  });
  return games;
}

std::string describe(const char* role, std::size_t rank, const EpisodeSummary& s) {
  return std::string(role) + " " + std::to_string(rank) + ": env " + std::to_string(s.env) + " game " +
         std::to_string(s.game_number) + " reward " + s.total_game_reward.to_string() + " steps " +
         std::to_string(s.total_game_steps) + " lives " + std::to_string(s.lives_used);
}

}  // namespace

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.cli == name) return k.kind;
  return std::nullopt;
}

std::string_view cli_name(PlotKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.cli;
  return "?";
}

std::string_view to_string(PlotKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.data;
  return "?";
}

PlotDataset emit_plot_data(const EnrichedTable& table, PlotKind kind, const PlotOptions& options) {
  const bool pong_only = kind == PlotKind::kMissDistance || kind == PlotKind::kScoreCurve;
  if (pong_only && table.game != Game::kPong)
    fail(ErrorCode::kIncompatible, "figure '" + std::string(cli_name(kind)) + "' needs pong data, input is " +
                                std::string(to_string(table.game)));
  std::set<std::uint32_t> envs;
  for (const auto& e : table.records) envs.insert(e.raw.env);
  if (kind == PlotKind::kPerEnvQuality && envs.size() < 2)
    fail(ErrorCode::kIncompatible, "figure 'per-env-quality' needs multi-env data, input has " + std::to_string(envs.size()) +
                                " env(s)");

  PlotDataset ds;
  ds.kind = kind;
  const auto summaries = summarize_games(table.records);
  switch (kind) {
    case PlotKind::kGameSummary:
    case PlotKind::kScoreCurve: {
      Series s{kind == PlotKind::kGameSummary ? "game reward" : "final score", "game", "game reward (points)", {}};
      std::size_t ordinal = 0;
      for (const auto& g : chronological(summaries))
        s.points.emplace_back(static_cast<double>(++ordinal), g.total_game_reward.to_double());
      ds.series.push_back(std::move(s));
      break;
    }
    case PlotKind::kPerEnvQuality: {
      for (std::uint32_t env : envs) {
        Series s{"env " + std::to_string(env), "game", "game reward (points)", {}};
        for (const auto& g : summaries)
          if (g.env == env && g.complete)
            s.points.emplace_back(static_cast<double>(g.game_number), g.total_game_reward.to_double());
        ds.series.push_back(std::move(s));
      }
      break;
    }
    case PlotKind::kBestWorst: {
      const Extremes ex = select_extremes(summaries, options.k);
      auto add = [&](const char* role, const std::vector<EpisodeSummary>& games) {
        for (std::size_t i = 0; i < games.size(); ++i) {
          Series s{describe(role, i + 1, games[i]), "life", "life reward (points)", {}};
          for (const auto& l : games[i].per_life)
            s.points.emplace_back(static_cast<double>(l.life_number), l.life_reward.to_double());
          ds.series.push_back(std::move(s));
        }
      };
      add("best", ex.best);
      add("worst", ex.worst);
      break;
    }
    case PlotKind::kMissDistance: {
      const GameProfile profile = pong_profile();
      std::map<std::uint32_t, std::vector<EnrichedRecord>> streams;
      for (const auto& e : table.records) streams[e.raw.env].push_back(e);
      std::vector<MissEvent> misses;
      Report ignored;
      for (const auto& [_, stream] : streams) {
        auto m = collect_misses(stream, profile, ignored);
        misses.insert(misses.end(), m.begin(), m.end());
      }
      std::stable_sort(misses.begin(), misses.end(), [](const MissEvent& a, const MissEvent& b) {
        return std::tie(a.step, a.env) < std::tie(b.step, b.env);
      });
      Series s{"paddle-ball distance at miss", "step", "distance (px)", {}};
      for (const auto& m : misses)
        if (m.distance) s.points.emplace_back(static_cast<double>(m.step), *m.distance);
      ds.series.push_back(std::move(s));
      break;
    }
  }
  return ds;
}

std::string plot_to_json(const PlotDataset& ds) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(ds.kind));
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& s : ds.series) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["x_label"] = s.x_label;
    js["y_label"] = s.y_label;
    js["points"] = nlohmann::ordered_json::array();
    for (const auto& [x, y] : s.points) js["points"].push_back({x, y});
    j["series"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string render_svg(const PlotDataset& ds) {
  constexpr double kW = 640, kH = 400, kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  for (const auto& s : ds.series)
    for (const auto& [x, y] : s.points) {
      if (!any) {
        x0 = x1 = x;
        y0 = y1 = y;
        any = true;
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kH - kBottom - (y - y0) / (y1 - y0) * (kH - kTop - kBottom); };
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '<') o += "&lt;";
      else if (c == '>') o += "&gt;";
      else if (c == '&') o += "&amp;";
      else o += c;
    }
    return o;
  };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kW - kLeft - kRight << "\" height=\""
    << kH - kTop - kBottom << "\" fill=\"none\" stroke=\"#444\"/>\n";
  const std::string xl = ds.series.empty() ? "" : ds.series[0].x_label;
  const std::string yl = ds.series.empty() ? "" : ds.series[0].y_label;
  o << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12 << "\" text-anchor=\"middle\" font-size=\"12\">" << esc(xl)
    << " [" << text::format_double(x0) << ", " << text::format_double(x1) << "]</text>\n";
  o << "<text x=\"14\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 14 " << kH / 2
    << ")\" text-anchor=\"middle\" font-size=\"12\">" << esc(yl) << " [" << text::format_double(y0) << ", "
    << text::format_double(y1) << "]</text>\n";
  for (std::size_t i = 0; i < ds.series.size(); ++i) {
    const auto& s = ds.series[i];
    const char* color = kColors[i % std::size(kColors)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : s.points) o << px(x) << ',' << py(y) << ' ';
    o << "\"/>\n";
    for (const auto& [x, y] : s.points)
      o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\" fill=\"" << color << "\"/>\n";
    o << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 14 + 14 * static_cast<double>(i) << "\" font-size=\"11\" fill=\""
      << color << "\">" << esc(s.name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace scraper
