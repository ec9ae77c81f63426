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
#include <optional>
#include <vector>

#include "image.hpp"

namespace scraper {

// Inclusive per-channel bounds.
struct ColorRange {
  std::uint8_t r_min = 0, r_max = 255;
  std::uint8_t g_min = 0, g_max = 255;
  std::uint8_t b_min = 0, b_max = 255;

  // Throws kSchema unless min <= max on every channel and values fit 0..255.
  static ColorRange make(int r_min, int r_max, int g_min, int g_max, int b_min, int b_max);

  bool contains(Rgb c) const {
    return c.r >= r_min && c.r <= r_max && c.g >= g_min && c.g <= g_max && c.b >= b_min && c.b <= b_max;
  }
  // True when the two boxes share at least one color.
  bool overlaps(const ColorRange& o) const;
  Rgb midpoint() const;

  friend bool operator==(const ColorRange&, const ColorRange&) = default;
};

class BitMask {
 public:
  BitMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool test(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool on = true) { bits_[index(x, y)] = on ? 1 : 0; }
  std::size_t popcount() const;
  bool empty() const { return popcount() == 0; }

  friend bool operator==(const BitMask&, const BitMask&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Component {
  std::size_t pixel_count = 0;
  Point centroid;
  Rect bounding_box;
};

enum class Connectivity { kFour = 4, kEight = 8 };

// Bit set iff the pixel lies in `crop` and inside `range`. Throws kGeometry
// when `crop` leaves the frame.
BitMask build_mask(const RgbImage& frame, const ColorRange& range, const Rect& crop);

// Mean coordinate of the set pixels; nullopt for an empty mask.
std::optional<Point> centroid(const BitMask& mask);

// Components partition the set pixels. Sorted by pixel_count descending, then
// bounding box (y0, x0) ascending.
std::vector<Component> connected_components(const BitMask& mask, Connectivity connectivity = Connectivity::kEight);

double distance(Point a, Point b);

}  // namespace scraper
