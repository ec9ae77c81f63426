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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace scraper {

// Game points held as a fixed-point decimal with nine fractional digits.
// Reward ledgers are prefix sums of these, so they stay exact where binary
// floating point would drift.
class Points {
 public:
  static constexpr int kFractionDigits = 9;
  static constexpr std::int64_t kScale = 1'000'000'000;

  constexpr Points() = default;
  static constexpr Points from_units(std::int64_t units) {
    Points p;
    p.units_ = units;
    return p;
  }
  static constexpr Points whole(std::int64_t value) { return from_units(value * kScale); }

  // Accepts [+-]digits[.digits][(e|E)[+-]digits]. Returns nullopt for text that
  // is malformed or not exactly representable.
  static std::optional<Points> parse(std::string_view text);
  // Exact conversion of the shortest round-trip decimal form of `value`.
  static std::optional<Points> from_double(double value);

  std::int64_t units() const { return units_; }
  double to_double() const;
  // Canonical text: no exponent, no trailing fractional zeros ("50", "-1", "0.25").
  std::string to_string() const;

  Points& operator+=(Points other) {
    units_ += other.units_;
    return *this;
  }
  friend Points operator+(Points a, Points b) { return a += b; }
  friend constexpr auto operator<=>(const Points&, const Points&) = default;

 private:
  std::int64_t units_ = 0;
};

}  // namespace scraper
