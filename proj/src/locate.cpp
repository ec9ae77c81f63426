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

#include "locate.hpp"

#include <string>

#include "error.hpp"

namespace scraper {

DetectionSet locate_characters(const RgbImage& frame, const GameProfile& profile) {
  if (frame.width() != profile.frame_width || frame.height() != profile.frame_height)
    fail(ErrorCode::kGeometry, "frame is " + std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
                                   ", profile expects " + std::to_string(profile.frame_width) + "x" +
                                   std::to_string(profile.frame_height));
  const auto min_pixels = static_cast<std::size_t>(profile.min_pixels);
  DetectionSet out = DetectionSet::absent(profile);
  for (std::size_t i = 0; i < profile.characters.size(); ++i) {
    const BitMask mask = build_mask(frame, profile.characters[i].range, profile.crop);
    if (mask.popcount() < min_pixels) continue;
    out.characters[i] = {centroid(mask), Provenance::kPrimaryColor};
  }

  if (!profile.frightened_range) return out;
  const auto agent = profile.index_of(names::kPacman);
  std::vector<std::size_t> unfound;
  for (std::size_t i = 0; i < profile.characters.size(); ++i)
    if (i != agent && out.characters[i].provenance == Provenance::kAbsent) unfound.push_back(i);
  if (unfound.empty()) return out;

  const BitMask scared = build_mask(frame, *profile.frightened_range, profile.crop);
  std::size_t next = 0;
  for (const Component& c : connected_components(scared, Connectivity::kEight)) {
    if (next == unfound.size() || c.pixel_count < min_pixels) break;  // sorted by size
    out.characters[unfound[next++]] = {c.centroid, Provenance::kFallbackComponent};
  }
  out.frightened = next > 0;
  return out;
}

}  // namespace scraper
