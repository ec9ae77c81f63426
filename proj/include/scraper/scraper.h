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

#ifndef SCRAPER_SCRAPER_H_
#define SCRAPER_SCRAPER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SCRAPER_API __declspec(dllexport)
#else
#define SCRAPER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scraper_status {
  SCRAPER_OK = 0,
  SCRAPER_E_INVALID_ARGUMENT = 1,
  SCRAPER_E_IO = 2,
  SCRAPER_E_PARSE = 3,
  SCRAPER_E_SCHEMA = 4,
  SCRAPER_E_ORDERING = 5,
  SCRAPER_E_VERSION = 6,
  SCRAPER_E_MISSING_MANIFEST = 7,
  SCRAPER_E_GEOMETRY = 8,
  SCRAPER_E_VALIDATION = 9,
  SCRAPER_E_INCOMPATIBLE = 10, /* input does not fit the requested operation */
  SCRAPER_E_INTERNAL = 11,
} scraper_status;

typedef enum scraper_game {
  SCRAPER_GAME_MS_PACMAN = 0,
  SCRAPER_GAME_PONG = 1,
} scraper_game;

typedef enum scraper_level {
  SCRAPER_LEVEL_INFO = 0,
  SCRAPER_LEVEL_WARN = 1,
  SCRAPER_LEVEL_ERROR = 2,
} scraper_level;

SCRAPER_API const char* scraper_status_string(scraper_status status);
/* Message of the last failed call on this thread; "" when none. */
SCRAPER_API const char* scraper_last_error(void);
SCRAPER_API void scraper_string_free(char* s);

/* ---- Raw-log writer ---------------------------------------------------- */

typedef struct scraper_writer scraper_writer;

typedef struct scraper_manifest {
  scraper_game game;
  uint32_t num_envs;
  const char* algorithm;
  int frame_width;  /* 0: native 160 */
  int frame_height; /* 0: native 210 */
} scraper_manifest;

typedef struct scraper_step {
  uint64_t step;
  uint32_t env;
  uint32_t action;
  const char* action_name; /* may be NULL */
  double reward;
  const char* reward_text; /* exact decimal; overrides `reward` when non-NULL */
  uint32_t lives;
  int done;
  const char* frame; /* relative path; NULL or "" for none */
} scraper_step;

/* Creates run_dir, writes manifest.json and the steps.csv header. */
SCRAPER_API scraper_status scraper_writer_open(const char* run_dir, const scraper_manifest* manifest,
                                               scraper_writer** out);
/* Rows must arrive in strictly increasing (step, env) order. */
SCRAPER_API scraper_status scraper_writer_append(scraper_writer* writer, const scraper_step* step);
/* Encodes a packed RGB24 frame as PNG. The relative path (for scraper_step.frame)
   is copied into path_out when it is non-NULL. */
SCRAPER_API scraper_status scraper_writer_save_frame(scraper_writer* writer, uint32_t env, uint64_t step,
                                                     const uint8_t* rgb, int width, int height, char* path_out,
                                                     size_t path_capacity);
SCRAPER_API scraper_status scraper_writer_close(scraper_writer* writer);
/* Closes when still open. */
SCRAPER_API void scraper_writer_free(scraper_writer* writer);

/* ---- Findings ---------------------------------------------------------- */

typedef struct scraper_report scraper_report;

SCRAPER_API size_t scraper_report_size(const scraper_report* report);
/* "LEVEL env=<e> step=<s> message"; valid until the report is freed. */
SCRAPER_API const char* scraper_report_line(const scraper_report* report, size_t index);
SCRAPER_API scraper_level scraper_report_level(const scraper_report* report, size_t index);
SCRAPER_API int scraper_report_has_blocking(const scraper_report* report);
SCRAPER_API void scraper_report_free(scraper_report* report);

/* ---- Validation and expansion ------------------------------------------ */

SCRAPER_API scraper_status scraper_validate(const char* run_dir, scraper_report** out);

typedef struct scraper_expand_options {
  const char* out_dir;      /* NULL: the run directory */
  const char* profile_path; /* NULL: built-in profile for the manifest's game */
  unsigned workers;         /* 0 treated as 1 */
  int delete_frames;
} scraper_expand_options;

typedef struct scraper_expand_result {
  int refused;
  size_t records;
  size_t outputs;
  size_t frames_deleted;
} scraper_expand_result;

/* SCRAPER_OK even when refused; inspect result->refused and the report. */
SCRAPER_API scraper_status scraper_expand(const char* run_dir, const scraper_expand_options* options,
                                          scraper_expand_result* result, scraper_report** report);

/* ---- Enriched tables, summaries, plots --------------------------------- */

typedef struct scraper_table scraper_table;

SCRAPER_API scraper_status scraper_table_open(const char* enriched_csv, scraper_table** out);
SCRAPER_API scraper_game scraper_table_game(const scraper_table* table);
SCRAPER_API size_t scraper_table_rows(const scraper_table* table);
SCRAPER_API void scraper_table_free(scraper_table* table);

typedef struct scraper_summary scraper_summary;

typedef struct scraper_summary_options {
  int extremes_only; /* 0: every game in (env, game) order */
  size_t top;
  size_t bottom;
} scraper_summary_options;

typedef struct scraper_game_row {
  const char* rank; /* "best", "worst" or "" */
  uint32_t env;
  uint32_t game_number;
  const char* reward; /* canonical decimal */
  uint64_t steps;
  uint32_t lives_used;
  uint64_t end_step;
  int complete;
} scraper_game_row;

SCRAPER_API scraper_status scraper_summarize(const scraper_table* table, const scraper_summary_options* options,
                                             scraper_summary** out);
SCRAPER_API size_t scraper_summary_size(const scraper_summary* summary);
/* Strings stay valid until the summary is freed. */
SCRAPER_API scraper_status scraper_summary_row(const scraper_summary* summary, size_t index, scraper_game_row* row);
SCRAPER_API void scraper_summary_free(scraper_summary* summary);

/* kind: game-summary, per-env-quality, best-worst, miss-distance, score-curve.
   Unknown names give SCRAPER_E_INVALID_ARGUMENT, kinds that do not fit the
   table SCRAPER_E_INCOMPATIBLE. Free the strings with scraper_string_free;
   svg_out may be NULL. */
SCRAPER_API scraper_status scraper_plot(const scraper_table* table, const char* kind, size_t k, char** json_out,
                                        char** svg_out);

/* ---- Synthetic runs and calibration ------------------------------------ */

SCRAPER_API size_t scraper_synth_scenario_count(void);
SCRAPER_API const char* scraper_synth_scenario_name(size_t index);
/* Writes the run plus expected_enriched_env{N}.csv oracle files. */
SCRAPER_API scraper_status scraper_synth(const char* scenario, const char* out_dir);

/* Inclusive per-channel range around the pixel at (x, y), clamped to 0..255.
   range_out: r_min, r_max, g_min, g_max, b_min, b_max. */
SCRAPER_API scraper_status scraper_calibrate_color(const uint8_t* rgb, int width, int height, int x, int y,
                                                   int tolerance, uint8_t range_out[6]);

#ifdef __cplusplus
}
#endif

#endif  // SCRAPER_SCRAPER_H_
