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

#include <algorithm>
#include <fstream>

#include "enrichment.hpp"
#include "error.hpp"
#include "image.hpp"
#include "parallel.hpp"

namespace fs = std::filesystem;

namespace scraper {

namespace {

ExpandResult refuse(Report report) {
  ExpandResult r;
  r.refused = true;
  r.report = std::move(report);
  return r;
}

Finding blocking(std::string message) { return {Level::kError, std::nullopt, std::nullopt, std::move(message)}; }

void write_findings(const fs::path& path, const Report& report) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const auto& f : report) out << f.format() << '\n';
  out.flush();
  if (!out) fail(ErrorCode::kIo, "write error: " + path.string());
}

}  // namespace

ExpandResult expand(const fs::path& run_dir, const ExpandOptions& options) {
  Report validation = validate_run(run_dir);
  if (has_blocking(validation)) return refuse(std::move(validation));

  const RawLog log = read_raw_log(run_dir);
  const Manifest& manifest = log.manifest;
  const GameProfile profile = options.profile ? *options.profile : builtin_profile(manifest.game);
  if (profile.game != manifest.game)
    return refuse({blocking("profile is for " + std::string(to_string(profile.game)) + " but the run is " +
                            std::string(to_string(manifest.game)))});
  if (profile.frame_width != manifest.frame_width || profile.frame_height != manifest.frame_height)
    return refuse({blocking("profile expects " + std::to_string(profile.frame_width) + "x" +
                            std::to_string(profile.frame_height) + " frames, manifest declares " +
                            std::to_string(manifest.frame_width) + "x" + std::to_string(manifest.frame_height))});
  if (fs::exists(run_dir / kFramesDeletedMarker)) {
    for (const auto& r : log.records)
      if (!r.frame.empty() && !fs::exists(run_dir / r.frame))
        return refuse({blocking("frames were deleted by a previous expansion; its outputs are final")});
  }

  const std::size_t n = log.records.size();
  const unsigned workers = std::max(1u, options.workers);

  // Phase 1: stateless per-frame localization.
  std::vector<std::optional<DetectionSet>> detections(n);
  std::vector<Report> frame_findings(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const StepRecord& r = log.records[i];
    auto note = [&](std::string msg) { frame_findings[i].push_back({Level::kWarn, r.env, r.step, std::move(msg)}); };
    if (r.frame.empty()) {
      note("no frame recorded; positions absent");
      return;
    }
    const fs::path frame = run_dir / r.frame;
    if (!fs::exists(frame)) {
      note("missing frame " + r.frame + "; positions absent");
      return;
    }
    try {
      detections[i] = locate_characters(read_png(frame), profile);
    } catch (const Error& e) {
      note(std::string("undecodable frame ") + r.frame + ": " + e.what());
    }
  });

  // Phase 2: order-dependent enrichment, one env per task.
  std::vector<std::vector<std::size_t>> by_env(manifest.num_envs);
  for (std::size_t i = 0; i < n; ++i) by_env[log.records[i].env].push_back(i);
  std::vector<std::vector<EnrichedRecord>> enriched(manifest.num_envs);
  std::vector<Report> env_findings(manifest.num_envs);
  parallel_for(manifest.num_envs, workers, [&](std::size_t env) {
    std::vector<StepRecord> stream;
    std::vector<std::optional<DetectionSet>> dets;
    stream.reserve(by_env[env].size());
    dets.reserve(by_env[env].size());
    for (std::size_t i : by_env[env]) {
      stream.push_back(log.records[i]);
      dets.push_back(detections[i]);
    }
    enriched[env] = enrich_stream(stream, dets, profile, env_findings[env]);
  });

  ExpandResult result;
  result.records = n;
  result.report = std::move(validation);
  for (auto& f : frame_findings) result.report.insert(result.report.end(), f.begin(), f.end());
  for (auto& f : env_findings) result.report.insert(result.report.end(), f.begin(), f.end());
  std::stable_sort(result.report.begin(), result.report.end(), [](const Finding& a, const Finding& b) {
    const auto ka = std::make_pair(a.env.value_or(0) + (a.env ? 1ull : 0ull), a.step.value_or(0));
    const auto kb = std::make_pair(b.env.value_or(0) + (b.env ? 1ull : 0ull), b.step.value_or(0));
    return ka < kb;
  });

  const fs::path out_dir = options.out_dir.empty() ? run_dir : options.out_dir;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " + ec.message());
  for (std::uint32_t env = 0; env < manifest.num_envs; ++env) {
    const fs::path path = out_dir / enriched_file_name(env);
    write_enriched_csv(path, manifest.game, enriched[env]);
    result.outputs.push_back(path);
  }
  write_findings(out_dir / "findings.txt", result.report);

  if (options.delete_frames) {
    for (const auto& r : log.records) {
      if (r.frame.empty()) continue;
      if (fs::remove(run_dir / r.frame, ec)) ++result.frames_deleted;
    }
    std::ofstream(run_dir / kFramesDeletedMarker) << "frames deleted after expansion into " << out_dir.string() << '\n';
  }
  return result;
}

}  // namespace scraper
