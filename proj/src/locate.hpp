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

#include <optional>
#include <vector>

#include "image.hpp"
#include "profiles.hpp"
#include "vision.hpp"

namespace scraper {

enum class Provenance { kPrimaryColor, kFallbackComponent, kAbsent };

struct Detection {
  std::optional<Point> position;
  Provenance provenance = Provenance::kAbsent;
};

// One entry per profile character, in profile order.
struct DetectionSet {
  std::vector<Detection> characters;
  bool frightened = false;

  static DetectionSet absent(const GameProfile& profile) {
    return {std::vector<Detection>(profile.characters.size()), false};
  }
};

// Color search over the playfield crop. Characters whose mask holds at least
// min_pixels pixels are placed at the mask centroid. For profiles with a
// frightened range, ghost slots left empty are filled from the largest
// frightened-colored components, in component order; identities in that case
// are anonymous.
DetectionSet locate_characters(const RgbImage& frame, const GameProfile& profile);

}  // namespace scraper
