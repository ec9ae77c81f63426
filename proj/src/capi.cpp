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

#include "scraper/scraper.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "enrichment.hpp"
#include "error.hpp"
#include "findings.hpp"
#include "profiles.hpp"
#include "record_model.hpp"
#include "summary.hpp"
#include "synth.hpp"

using namespace scraper;

struct scraper_writer {
  std::unique_ptr<RawLogWriter> impl;
};

struct scraper_report {
  Report findings;
  std::vector<std::string> lines;
};

struct scraper_table {
  EnrichedTable table;
};

struct scraper_summary {
  struct Row {
    std::string rank;
    EpisodeSummary game;
    std::string reward;
  };
  std::vector<Row> rows;
};

namespace {

thread_local std::string g_last_error;

scraper_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SCRAPER_E_INVALID_ARGUMENT;
    case ErrorCode::kIo: return SCRAPER_E_IO;
    case ErrorCode::kParse: return SCRAPER_E_PARSE;
    case ErrorCode::kSchema: return SCRAPER_E_SCHEMA;
    case ErrorCode::kOrdering: return SCRAPER_E_ORDERING;
    case ErrorCode::kVersion: return SCRAPER_E_VERSION;
    case ErrorCode::kMissingManifest: return SCRAPER_E_MISSING_MANIFEST;
    case ErrorCode::kGeometry: return SCRAPER_E_GEOMETRY;
    case ErrorCode::kValidation: return SCRAPER_E_VALIDATION;
    case ErrorCode::kIncompatible: return SCRAPER_E_INCOMPATIBLE;
  }
  return SCRAPER_E_INTERNAL;
}

scraper_status set_error(scraper_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
scraper_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return SCRAPER_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SCRAPER_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SCRAPER_E_INTERNAL, e.what());
  }
}

#define SCRAPER_REQUIRE(cond, what) \
  if (!(cond)) return set_error(SCRAPER_E_INVALID_ARGUMENT, what)

scraper_report* make_report(Report findings) {
  auto* r = new scraper_report{std::move(findings), {}};
  r->lines.reserve(r->findings.size());
  for (const auto& f : r->findings) r->lines.push_back(f.format());
  return r;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* scraper_status_string(scraper_status status) {
  switch (status) {
    case SCRAPER_OK: return "ok";
    case SCRAPER_E_INVALID_ARGUMENT: return "invalid argument";
    case SCRAPER_E_IO: return "i/o error";
    case SCRAPER_E_PARSE: return "parse error";
    case SCRAPER_E_SCHEMA: return "schema error";
    case SCRAPER_E_ORDERING: return "ordering error";
    case SCRAPER_E_VERSION: return "unsupported format version";
    case SCRAPER_E_MISSING_MANIFEST: return "missing manifest";
    case SCRAPER_E_GEOMETRY: return "geometry error";
    case SCRAPER_E_VALIDATION: return "validation error";
    case SCRAPER_E_INCOMPATIBLE: return "incompatible input";
    case SCRAPER_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* scraper_last_error(void) { return g_last_error.c_str(); }

void scraper_string_free(char* s) { std::free(s); }

scraper_status scraper_writer_open(const char* run_dir, const scraper_manifest* manifest, scraper_writer** out) {
  SCRAPER_REQUIRE(run_dir && manifest && out, "run_dir, manifest and out are required");
  *out = nullptr;
  SCRAPER_REQUIRE(manifest->game == SCRAPER_GAME_MS_PACMAN || manifest->game == SCRAPER_GAME_PONG, "unknown game");
  return guarded([&] {
    Manifest m;
    m.game = manifest->game == SCRAPER_GAME_PONG ? Game::kPong : Game::kMsPacman;
    m.num_envs = manifest->num_envs;
    m.algorithm = manifest->algorithm ? manifest->algorithm : "";
    if (manifest->frame_width > 0) m.frame_width = manifest->frame_width;
    if (manifest->frame_height > 0) m.frame_height = manifest->frame_height;
    auto w = std::make_unique<scraper_writer>();
    w->impl = std::make_unique<RawLogWriter>(run_dir, std::move(m));
    *out = w.release();
  });
}

scraper_status scraper_writer_append(scraper_writer* writer, const scraper_step* step) {
  SCRAPER_REQUIRE(writer && step, "writer and step are required");
  return guarded([&] {
    StepRecord r;
    r.step = step->step;
    r.env = step->env;
    r.action = step->action;
    r.action_name = step->action_name ? step->action_name : "";
    if (step->reward_text) {
      const auto exact = Points::parse(step->reward_text);
      if (!exact) fail(ErrorCode::kParse, std::string("bad reward '") + step->reward_text + "'");
      r.reward = *exact;
    } else {
      const auto approx = Points::from_double(step->reward);
      if (!approx) fail(ErrorCode::kInvalidArgument, "reward is not a finite representable value");
      r.reward = *approx;
    }
    r.lives = step->lives;
    r.done = step->done != 0;
    r.frame = step->frame ? step->frame : "";
    writer->impl->append(r);
  });
}

scraper_status scraper_writer_save_frame(scraper_writer* writer, uint32_t env, uint64_t step, const uint8_t* rgb,
                                         int width, int height, char* path_out, size_t path_capacity) {
  SCRAPER_REQUIRE(writer && rgb, "writer and pixels are required");
  SCRAPER_REQUIRE(width > 0 && height > 0, "frame dimensions must be positive");
  return guarded([&] {
    RgbImage img(width, height);
    std::memcpy(img.bytes().data(), rgb, img.bytes().size());
    const std::string rel = writer->impl->save_frame(env, step, img);
    if (path_out) {
      if (rel.size() + 1 > path_capacity) fail(ErrorCode::kInvalidArgument, "path buffer too small for " + rel);
      std::memcpy(path_out, rel.c_str(), rel.size() + 1);
    }
  });
}

scraper_status scraper_writer_close(scraper_writer* writer) {
  SCRAPER_REQUIRE(writer, "writer is required");
  return guarded([&] { writer->impl->close(); });
}

void scraper_writer_free(scraper_writer* writer) { delete writer; }

size_t scraper_report_size(const scraper_report* report) { return report ? report->lines.size() : 0; }

const char* scraper_report_line(const scraper_report* report, size_t index) {
  if (!report || index >= report->lines.size()) return nullptr;
  return report->lines[index].c_str();
}

scraper_level scraper_report_level(const scraper_report* report, size_t index) {
  if (!report || index >= report->findings.size()) return SCRAPER_LEVEL_INFO;
  switch (report->findings[index].level) {
    case Level::kInfo: return SCRAPER_LEVEL_INFO;
    case Level::kWarn: return SCRAPER_LEVEL_WARN;
    case Level::kError: return SCRAPER_LEVEL_ERROR;
  }
  return SCRAPER_LEVEL_INFO;
}

int scraper_report_has_blocking(const scraper_report* report) {
  return report && has_blocking(report->findings) ? 1 : 0;
}

void scraper_report_free(scraper_report* report) { delete report; }

scraper_status scraper_validate(const char* run_dir, scraper_report** out) {
  SCRAPER_REQUIRE(run_dir && out, "run_dir and out are required");
  *out = nullptr;
  return guarded([&] { *out = make_report(validate_run(run_dir)); });
}

scraper_status scraper_expand(const char* run_dir, const scraper_expand_options* options,
                              scraper_expand_result* result, scraper_report** report) {
  SCRAPER_REQUIRE(run_dir && report, "run_dir and report are required");
  *report = nullptr;
  return guarded([&] {
    ExpandOptions opts;
    if (options) {
      if (options->out_dir) opts.out_dir = options->out_dir;
      if (options->profile_path) opts.profile = load_profile(options->profile_path);
      opts.workers = std::max(1u, options->workers);
      opts.delete_frames = options->delete_frames != 0;
    }
    ExpandResult r = expand(run_dir, opts);
    if (result) *result = {r.refused ? 1 : 0, r.records, r.outputs.size(), r.frames_deleted};
    *report = make_report(std::move(r.report));
  });
}

scraper_status scraper_table_open(const char* enriched_csv, scraper_table** out) {
  SCRAPER_REQUIRE(enriched_csv && out, "path and out are required");
  *out = nullptr;
  return guarded([&] { *out = new scraper_table{read_enriched_csv(enriched_csv)}; });
}

scraper_game scraper_table_game(const scraper_table* table) {
  return table && table->table.game == Game::kPong ? SCRAPER_GAME_PONG : SCRAPER_GAME_MS_PACMAN;
}

size_t scraper_table_rows(const scraper_table* table) { return table ? table->table.records.size() : 0; }

void scraper_table_free(scraper_table* table) { delete table; }

scraper_status scraper_summarize(const scraper_table* table, const scraper_summary_options* options,
                                 scraper_summary** out) {
  SCRAPER_REQUIRE(table && out, "table and out are required");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<scraper_summary>();
    const auto games = summarize_games(table->table.records);
    auto add = [&](const char* rank, const EpisodeSummary& g) {
      s->rows.push_back({rank, g, g.total_game_reward.to_string()});
    };
    if (!options || !options->extremes_only) {
      for (const auto& g : games) add("", g);
    } else {
      const auto best = select_extremes(games, options->top).best;
      for (const auto& g : best) add("best", g);
      for (const auto& g : select_extremes(games, options->bottom).worst) {
        const bool shown = std::any_of(best.begin(), best.end(), [&](const EpisodeSummary& b) {
          return b.env == g.env && b.game_number == g.game_number;
        });
        if (!shown) add("worst", g);
      }
    }
    *out = s.release();
  });
}

size_t scraper_summary_size(const scraper_summary* summary) { return summary ? summary->rows.size() : 0; }

scraper_status scraper_summary_row(const scraper_summary* summary, size_t index, scraper_game_row* row) {
  SCRAPER_REQUIRE(summary && row, "summary and row are required");
  SCRAPER_REQUIRE(index < summary->rows.size(), "row index out of range");
  const auto& r = summary->rows[index];
  *row = {r.rank.c_str(),        r.game.env,         r.game.game_number, r.reward.c_str(),
          r.game.total_game_steps, r.game.lives_used, r.game.end_step,   r.game.complete ? 1 : 0};
  return SCRAPER_OK;
}

void scraper_summary_free(scraper_summary* summary) { delete summary; }

scraper_status scraper_plot(const scraper_table* table, const char* kind, size_t k, char** json_out,
                            char** svg_out) {
  SCRAPER_REQUIRE(table && kind && json_out, "table, kind and json_out are required");
  *json_out = nullptr;
  if (svg_out) *svg_out = nullptr;
  const auto parsed = parse_plot_kind(kind);
  if (!parsed) return set_error(SCRAPER_E_INVALID_ARGUMENT, std::string("unknown figure kind '") + kind + "'");
  return guarded([&] {
    PlotOptions opts;
    opts.k = k;
    const PlotDataset data = emit_plot_data(table->table, *parsed, opts);
    std::unique_ptr<char, decltype(&std::free)> json(dup_string(plot_to_json(data)), &std::free);
    if (svg_out) *svg_out = dup_string(render_svg(data));
    *json_out = json.release();
  });
}

size_t scraper_synth_scenario_count(void) { return synth::scenario_names().size(); }

const char* scraper_synth_scenario_name(size_t index) {
  static const std::vector<std::string> names = synth::scenario_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

scraper_status scraper_synth(const char* scenario, const char* out_dir) {
  SCRAPER_REQUIRE(scenario && out_dir, "scenario and out_dir are required");
  return guarded([&] {
    const auto script = synth::scenario(scenario);
    if (!script) fail(ErrorCode::kInvalidArgument, std::string("unknown scenario '") + scenario + "'");
    synth::script_episode(*script, out_dir, builtin_profile(script->game));
  });
}

scraper_status scraper_calibrate_color(const uint8_t* rgb, int width, int height, int x, int y, int tolerance,
                                       uint8_t range_out[6]) {
  SCRAPER_REQUIRE(rgb && range_out, "pixels and range_out are required");
  SCRAPER_REQUIRE(width > 0 && height > 0, "frame dimensions must be positive");
  return guarded([&] {
    RgbImage img(width, height);
    std::memcpy(img.bytes().data(), rgb, img.bytes().size());
    const ColorRange r = calibrate_color(img, x, y, tolerance);
    const uint8_t v[6] = {r.r_min, r.r_max, r.g_min, r.g_max, r.b_min, r.b_max};
    std::memcpy(range_out, v, sizeof v);
  });
}

}  // extern "C"
