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

#include "record_model.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "image.hpp"
#include "text.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace scraper {

std::string_view to_string(Game game) {
  switch (game) {
    case Game::kMsPacman: return "ms_pacman";
    case Game::kPong: return "pong";
  }
  return "?";
}

std::optional<Game> parse_game(std::string_view name) {
  if (name == "ms_pacman") return Game::kMsPacman;
  if (name == "pong") return Game::kPong;
  return std::nullopt;
}

std::string frame_file_name(std::uint32_t env, std::uint64_t step) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "e%02u_s%08llu.png", env, static_cast<unsigned long long>(step));
  return buf;
}

std::string format_step_row(const StepRecord& r) {
  return text::join_csv({std::to_string(r.step), std::to_string(r.env), std::to_string(r.action),
                         text::csv_field(r.action_name), r.reward.to_string(), std::to_string(r.lives),
                         r.done ? "1" : "0", text::csv_field(r.frame)});
}

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

const std::set<std::string> kManifestKeys = {"game",        "num_envs",     "algorithm", "frame_dir",
                                             "frame_width", "frame_height", "created",   "format_version"};

template <typename T>
T manifest_int(const ordered_json& j, const char* key, long min_value) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < min_value)
    fail(ErrorCode::kSchema, std::string("manifest.json: '") + key + "' must be an integer >= " + std::to_string(min_value));
  return static_cast<T>(v.get<long long>());
}

std::string manifest_text(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) fail(ErrorCode::kSchema, std::string("manifest.json: '") + key + "' must be a string");
  return v.get<std::string>();
}

void fsync_path(const fs::path& path) {
  const int fd = ::open(path.c_str(), O_RDONLY);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

}  // namespace

Manifest read_manifest(const fs::path& run_dir) {
  const fs::path path = run_dir / "manifest.json";
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kMissingManifest, "missing manifest: " + path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, "manifest.json: " + std::string(e.what()));
  }
  if (!j.is_object()) fail(ErrorCode::kSchema, "manifest.json: top level must be an object");
  // Version first, so a future layout reports a version error rather than a
  // confusing key mismatch.
  if (j.contains("format_version")) {
    const auto& v = j["format_version"];
    if (!v.is_number_integer() || v.get<long long>() != kFormatVersion)
      fail(ErrorCode::kVersion, "manifest.json: unsupported format_version " + v.dump());
  }
  std::set<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.insert(k);
  if (keys != kManifestKeys) {
    std::string missing, extra;
    for (const auto& k : kManifestKeys)
      if (!keys.count(k)) missing += " " + k;
    for (const auto& k : keys)
      if (!kManifestKeys.count(k)) extra += " " + k;
    fail(ErrorCode::kSchema, "manifest.json: key mismatch (missing:" + missing + "; unexpected:" + extra + ")");
  }
  Manifest m;
  const auto game = parse_game(manifest_text(j, "game"));
  if (!game) fail(ErrorCode::kSchema, "manifest.json: unknown game " + j["game"].dump());
  m.game = *game;
  m.num_envs = manifest_int<std::uint32_t>(j, "num_envs", 1);
  m.algorithm = manifest_text(j, "algorithm");
  m.frame_dir = manifest_text(j, "frame_dir");
  m.frame_width = manifest_int<int>(j, "frame_width", 1);
  m.frame_height = manifest_int<int>(j, "frame_height", 1);
  m.created = manifest_text(j, "created");
  m.format_version = manifest_int<int>(j, "format_version", 1);
  return m;
}

void write_manifest(const fs::path& run_dir, const Manifest& m) {
  ordered_json j;
  j["game"] = std::string(to_string(m.game));
  j["num_envs"] = m.num_envs;
  j["algorithm"] = m.algorithm;
  j["frame_dir"] = m.frame_dir;
  j["frame_width"] = m.frame_width;
  j["frame_height"] = m.frame_height;
  j["created"] = m.created;
  j["format_version"] = m.format_version;
  const fs::path path = run_dir / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << j.dump(2) << '\n';
  if (!out) fail(ErrorCode::kIo, "write error: " + path.string());
}

RawLogWriter::RawLogWriter(const fs::path& run_dir, Manifest manifest)
    : run_dir_(run_dir), manifest_(std::move(manifest)) {
  if (manifest_.num_envs == 0) fail(ErrorCode::kSchema, "num_envs must be positive");
  if (manifest_.created.empty()) manifest_.created = current_timestamp();
  std::error_code ec;
  fs::create_directories(run_dir_ / manifest_.frame_dir, ec);
  if (ec) fail(ErrorCode::kIo, "write error: " + (run_dir_ / manifest_.frame_dir).string() + ": " + ec.message());
  write_manifest(run_dir_, manifest_);
  const fs::path steps = run_dir_ / "steps.csv";
  out_.open(steps, std::ios::binary | std::ios::trunc);
  out_ << kStepsHeader << '\n';
  out_.flush();
  if (!out_) fail(ErrorCode::kIo, "write error: " + steps.string());
}

RawLogWriter::~RawLogWriter() {
  try {
    close();
  } catch (...) {
  }
}

void RawLogWriter::append(const StepRecord& record) {
  if (!out_.is_open()) fail(ErrorCode::kIo, "writer is closed: " + (run_dir_ / "steps.csv").string());
  if (record.env >= manifest_.num_envs)
    fail(ErrorCode::kSchema, "env " + std::to_string(record.env) + " out of range for num_envs " +
                                 std::to_string(manifest_.num_envs));
  if (last_) {
    const auto [step, env] = *last_;
    if (record.step < step || (record.step == step && record.env <= env))
      fail(ErrorCode::kOrdering, "step " + std::to_string(record.step) + " env " + std::to_string(record.env) +
                                     " appended after step " + std::to_string(step) + " env " + std::to_string(env));
  }
  out_ << format_step_row(record) << '\n';
  out_.flush();
  if (!out_) fail(ErrorCode::kIo, "write error: " + (run_dir_ / "steps.csv").string());
  last_ = {record.step, record.env};
  ++rows_;
}

std::string RawLogWriter::save_frame(std::uint32_t env, std::uint64_t step, const RgbImage& frame) {
  if (frame.width() != manifest_.frame_width || frame.height() != manifest_.frame_height)
    fail(ErrorCode::kGeometry, "frame is " + std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
                                   ", manifest declares " + std::to_string(manifest_.frame_width) + "x" +
                                   std::to_string(manifest_.frame_height));
  const std::string rel = (fs::path(manifest_.frame_dir) / frame_file_name(env, step)).generic_string();
  write_png(run_dir_ / rel, frame);
  return rel;
}

void RawLogWriter::close() {
  if (!out_.is_open()) return;
  out_.close();
  fsync_path(run_dir_ / "steps.csv");
  if (out_.fail()) fail(ErrorCode::kIo, "write error: " + (run_dir_ / "steps.csv").string());
}

namespace {

[[noreturn]] void row_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParse, "steps.csv line " + std::to_string(line) + ": " + what);
}

std::uint64_t row_uint(const std::string& field, const char* name, std::size_t line, std::uint64_t max_value) {
  const auto v = text::parse_uint(field);
  if (!v || *v > max_value) row_error(line, std::string("invalid ") + name + " '" + field + "'");
  return *v;
}

}  // namespace

RawLog read_raw_log(const fs::path& run_dir) {
  RawLog log;
  log.manifest = read_manifest(run_dir);
  const fs::path steps = run_dir / "steps.csv";
  std::ifstream in(steps, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read " + steps.string());
  std::string line;
  if (!std::getline(in, line) || line != kStepsHeader) row_error(1, "header must be '" + std::string(kStepsHeader) + "'");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') row_error(line_no, "CRLF line ending");
    const auto fields = text::split_csv(line);
    if (!fields || fields->size() != 8) row_error(line_no, "expected 8 fields");
    const auto& f = *fields;
    StepRecord r;
    r.step = row_uint(f[0], "step", line_no, UINT64_MAX);
    r.env = static_cast<std::uint32_t>(row_uint(f[1], "env", line_no, UINT32_MAX));
    r.action = static_cast<std::uint32_t>(row_uint(f[2], "action", line_no, UINT32_MAX));
    r.action_name = f[3];
    const auto reward = Points::parse(f[4]);
    if (!reward) row_error(line_no, "invalid reward '" + f[4] + "'");
    r.reward = *reward;
    r.lives = static_cast<std::uint32_t>(row_uint(f[5], "lives", line_no, UINT32_MAX));
    if (f[6] != "0" && f[6] != "1") row_error(line_no, "invalid done '" + f[6] + "' (expected 0 or 1)");
    r.done = f[6] == "1";
    r.frame = f[7];
    log.records.push_back(std::move(r));
  }
  return log;
}

Report validate_log(const fs::path& run_dir, const RawLog& log) {
  Report report;
  const Manifest& m = log.manifest;
  const bool frames_deleted = fs::exists(run_dir / kFramesDeletedMarker);
  std::optional<std::pair<std::uint64_t, std::uint32_t>> last;
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    const StepRecord& r = log.records[i];
    const std::string where = "steps.csv line " + std::to_string(i + 2) + ": ";
    auto add = [&](const std::string& msg) { report.push_back({Level::kError, r.env, r.step, where + msg}); };
    if (r.env >= m.num_envs)
      add("env " + std::to_string(r.env) + " out of range (num_envs " + std::to_string(m.num_envs) + ")");
    if (last && (r.step < last->first || (r.step == last->first && r.env <= last->second)))
      add("step order violation after step " + std::to_string(last->first) + " env " + std::to_string(last->second));
    last = {r.step, r.env};
    if (r.frame.empty()) continue;
    const fs::path frame = run_dir / r.frame;
    std::error_code ec;
    if (!fs::is_regular_file(frame, ec)) {
      if (!frames_deleted) add("missing frame " + r.frame);
      continue;
    }
    try {
      const ImageSize size = read_png_size(frame);
      if (size.width != m.frame_width || size.height != m.frame_height)
        add("frame dimension mismatch: " + r.frame + " is " + std::to_string(size.width) + "x" +
            std::to_string(size.height) + ", manifest declares " + std::to_string(m.frame_width) + "x" +
            std::to_string(m.frame_height));
    } catch (const Error& e) {
      add(std::string("unreadable frame: ") + e.what());
    }
  }
  return report;
}

Report validate_run(const fs::path& run_dir) {
  std::error_code ec;
  if (!fs::is_directory(run_dir, ec)) fail(ErrorCode::kIo, "not a readable directory: " + run_dir.string());
  RawLog log;
  try {
    log = read_raw_log(run_dir);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo && !fs::exists(run_dir / "steps.csv"))
      return {{Level::kError, std::nullopt, std::nullopt, std::string("missing steps.csv in ") + run_dir.string()}};
    if (e.code() == ErrorCode::kIo) throw;
    return {{Level::kError, std::nullopt, std::nullopt, e.what()}};
  }
  return validate_log(run_dir, log);
}

}  // namespace scraper
