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

#include "vision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"

namespace scraper {

ColorRange ColorRange::make(int r_min, int r_max, int g_min, int g_max, int b_min, int b_max) {
  const int v[6] = {r_min, r_max, g_min, g_max, b_min, b_max};
  for (int i = 0; i < 6; ++i)
    if (v[i] < 0 || v[i] > 255) fail(ErrorCode::kSchema, "color bound " + std::to_string(v[i]) + " outside 0..255");
  for (int i = 0; i < 6; i += 2)
    if (v[i] > v[i + 1])
      fail(ErrorCode::kSchema, "color range min " + std::to_string(v[i]) + " exceeds max " + std::to_string(v[i + 1]));
  ColorRange c;
  c.r_min = static_cast<std::uint8_t>(r_min);
  c.r_max = static_cast<std::uint8_t>(r_max);
  c.g_min = static_cast<std::uint8_t>(g_min);
  c.g_max = static_cast<std::uint8_t>(g_max);
  c.b_min = static_cast<std::uint8_t>(b_min);
  c.b_max = static_cast<std::uint8_t>(b_max);
  return c;
}

bool ColorRange::overlaps(const ColorRange& o) const {
  auto meet = [](int a0, int a1, int b0, int b1) { return a0 <= b1 && b0 <= a1; };
  return meet(r_min, r_max, o.r_min, o.r_max) && meet(g_min, g_max, o.g_min, o.g_max) &&
         meet(b_min, b_max, o.b_min, o.b_max);
}

Rgb ColorRange::midpoint() const {
  auto mid = [](std::uint8_t lo, std::uint8_t hi) { return static_cast<std::uint8_t>((lo + hi) / 2); };
  return {mid(r_min, r_max), mid(g_min, g_max), mid(b_min, b_max)};
}

BitMask::BitMask(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) fail(ErrorCode::kGeometry, "mask dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t BitMask::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitMask build_mask(const RgbImage& frame, const ColorRange& range, const Rect& crop) {
  if (crop.x0 < 0 || crop.y0 < 0 || crop.x1 >= frame.width() || crop.y1 >= frame.height() || crop.x0 > crop.x1 ||
      crop.y0 > crop.y1)
    fail(ErrorCode::kGeometry, "crop (" + std::to_string(crop.x0) + "," + std::to_string(crop.y0) + ")-(" +
                                   std::to_string(crop.x1) + "," + std::to_string(crop.y1) + ") outside " +
                                   std::to_string(frame.width()) + "x" + std::to_string(frame.height()) + " frame");
  BitMask mask(frame.width(), frame.height());
  const auto bytes = frame.bytes();
  const auto stride = static_cast<std::size_t>(frame.width()) * 3;
  for (int y = crop.y0; y <= crop.y1; ++y) {
    const std::uint8_t* p = bytes.data() + static_cast<std::size_t>(y) * stride + static_cast<std::size_t>(crop.x0) * 3;
    for (int x = crop.x0; x <= crop.x1; ++x, p += 3) {
      if (p[0] >= range.r_min && p[0] <= range.r_max && p[1] >= range.g_min && p[1] <= range.g_max &&
          p[2] >= range.b_min && p[2] <= range.b_max)
        mask.set(x, y);
    }
  }
  return mask;
}

std::optional<Point> centroid(const BitMask& mask) {
  // Integer sums keep the mean exact up to the final division.
  std::uint64_t sx = 0, sy = 0, n = 0;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x)
      if (mask.test(x, y)) {
        sx += static_cast<std::uint64_t>(x);
        sy += static_cast<std::uint64_t>(y);
        ++n;
      }
  if (n == 0) return std::nullopt;
  return Point{static_cast<double>(sx) / static_cast<double>(n), static_cast<double>(sy) / static_cast<double>(n)};
}

namespace {

struct DisjointSet {
  std::vector<std::uint32_t> parent;

  std::uint32_t make() {
    parent.push_back(static_cast<std::uint32_t>(parent.size()));
    return parent.back();
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Component> connected_components(const BitMask& mask, Connectivity connectivity) {
  const int w = mask.width(), h = mask.height();
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> labels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), kNone);
  auto at = [&](int x, int y) -> std::uint32_t& {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)];
  };
  DisjointSet sets;
  const bool eight = connectivity == Connectivity::kEight;

  // First pass: provisional labels from the already-visited neighbours.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.test(x, y)) continue;
      std::uint32_t label = kNone;
      auto consider = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w) return;
        const std::uint32_t l = at(nx, ny);
        if (l == kNone) return;
        if (label == kNone)
          label = l;
        else
          sets.unite(label, l);
      };
      consider(x - 1, y);
      consider(x, y - 1);
      if (eight) {
        consider(x - 1, y - 1);
        consider(x + 1, y - 1);
      }
      at(x, y) = label == kNone ? sets.make() : label;
    }
  }

  struct Acc {
    std::uint64_t n = 0, sx = 0, sy = 0;
    Rect box{INT32_MAX, INT32_MAX, -1, -1};
  };
  std::vector<Acc> acc(sets.parent.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::uint32_t l = at(x, y);
      if (l == kNone) continue;
      Acc& a = acc[sets.find(l)];
      ++a.n;
      a.sx += static_cast<std::uint64_t>(x);
      a.sy += static_cast<std::uint64_t>(y);
      a.box.x0 = std::min(a.box.x0, x);
      a.box.y0 = std::min(a.box.y0, y);
      a.box.x1 = std::max(a.box.x1, x);
      a.box.y1 = std::max(a.box.y1, y);
    }
  }
  std::vector<Component> out;
  for (const Acc& a : acc) {
    if (a.n == 0) continue;
    out.push_back({a.n,
                   {static_cast<double>(a.sx) / static_cast<double>(a.n), static_cast<double>(a.sy) / static_cast<double>(a.n)},
                   a.box});
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.pixel_count != b.pixel_count) return a.pixel_count > b.pixel_count;
    if (a.bounding_box.y0 != b.bounding_box.y0) return a.bounding_box.y0 < b.bounding_box.y0;
    return a.bounding_box.x0 < b.bounding_box.x0;
  });
  return out;
}

double distance(Point a, Point b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace scraper
