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
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "findings.hpp"
#include "points.hpp"

namespace scraper {

enum class Game { kMsPacman, kPong };

std::string_view to_string(Game game);
std::optional<Game> parse_game(std::string_view name);

inline constexpr int kFormatVersion = 1;
inline constexpr int kNativeWidth = 160;
inline constexpr int kNativeHeight = 210;
inline constexpr std::string_view kStepsHeader = "step,env,action,action_name,reward,lives,done,frame";

struct StepRecord {
  std::uint64_t step = 0;
  std::uint32_t env = 0;
  std::uint32_t action = 0;
  std::string action_name;
  Points reward;
  std::uint32_t lives = 0;
  bool done = false;
  std::string frame;  // relative to the run directory; may be empty

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct Manifest {
  Game game = Game::kMsPacman;
  std::uint32_t num_envs = 1;
  std::string algorithm;
  std::string frame_dir = "frames";
  int frame_width = kNativeWidth;
  int frame_height = kNativeHeight;
  std::string created;
  int format_version = kFormatVersion;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

struct RawLog {
  Manifest manifest;
  std::vector<StepRecord> records;
};

// `e{env:02}_s{step:08}.png`
std::string frame_file_name(std::uint32_t env, std::uint64_t step);

std::string format_step_row(const StepRecord& record);

Manifest read_manifest(const std::filesystem::path& run_dir);
void write_manifest(const std::filesystem::path& run_dir, const Manifest& manifest);

// ISO-8601 UTC wall-clock time, informational only.
std::string current_timestamp();

// Single writer for one run directory. Creates the directory layout on
// construction and appends rows to steps.csv; every append is checked against
// the manifest and the previous row. Nothing here inspects frame contents.
class RawLogWriter {
 public:
  RawLogWriter(const std::filesystem::path& run_dir, Manifest manifest);
  ~RawLogWriter();
  RawLogWriter(const RawLogWriter&) = delete;
  RawLogWriter& operator=(const RawLogWriter&) = delete;

  void append(const StepRecord& record);
  // Encodes `frame` under frame_dir and returns the relative path to put in
  // StepRecord::frame.
  std::string save_frame(std::uint32_t env, std::uint64_t step, const class RgbImage& frame);
  void close();

  const Manifest& manifest() const { return manifest_; }
  const std::filesystem::path& run_dir() const { return run_dir_; }
  std::size_t rows() const { return rows_; }

 private:
  std::filesystem::path run_dir_;
  Manifest manifest_;
  std::ofstream out_;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> last_;
  std::size_t rows_ = 0;
};

// Strict reader; rows are returned in file order without ordering checks
// (ordering is validate_run's concern).
RawLog read_raw_log(const std::filesystem::path& run_dir);

// Marker left in a run directory once an expansion deleted its frames.
inline constexpr std::string_view kFramesDeletedMarker = ".frames_deleted";

// Structural checks of a run directory. Throws only when the directory itself
// is unreadable; everything else is reported as findings.
Report validate_run(const std::filesystem::path& run_dir);
Report validate_log(const std::filesystem::path& run_dir, const RawLog& log);

}  // namespace scraper
