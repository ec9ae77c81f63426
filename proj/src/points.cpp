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

#include "points.hpp"

#include <charconv>
#include <cstdlib>

namespace scraper {

namespace {

constexpr std::int64_t kMaxUnits = INT64_MAX / 10;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::optional<Points> Points::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int point_shift = 0;  // number of digits after the decimal point
  bool seen_digit = false;
  while (i < text.size() && is_digit(text[i])) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      digits.push_back(text[i++]);
      ++point_shift;
      seen_digit = true;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc{} || ptr == first) return std::nullopt;
    i = static_cast<std::size_t>(ptr - text.data());
    if (exponent > 40 || exponent < -40) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;

  // value = digits * 10^(exponent - point_shift); scale to units.
  long shift = exponent - point_shift + kFractionDigits;
  if (shift < 0) {
    // Dropped digits must all be zero.
    const auto drop = static_cast<std::size_t>(-shift);
    if (drop > digits.size()) {
      if (digits.find_first_not_of('0') != std::string::npos) return std::nullopt;
      digits.clear();
    } else {
      const auto tail = digits.substr(digits.size() - drop);
      if (tail.find_first_not_of('0') != std::string::npos) return std::nullopt;
      digits.resize(digits.size() - drop);
    }
    shift = 0;
  }
  std::int64_t units = 0;
  for (char c : digits) {
    if (units > kMaxUnits) return std::nullopt;
    units = units * 10 + (c - '0');
  }
  for (long s = 0; s < shift; ++s) {
    if (units > kMaxUnits) return std::nullopt;
    units *= 10;
  }
  return from_units(negative ? -units : units);
}

std::optional<Points> Points::from_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return std::nullopt;
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

double Points::to_double() const {
  return std::strtod(to_string().c_str(), nullptr);
}

std::string Points::to_string() const {
  const bool negative = units_ < 0;
  // Magnitude as unsigned to survive INT64_MIN.
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(units_)
                                     : static_cast<std::uint64_t>(units_);
  const std::uint64_t whole = mag / static_cast<std::uint64_t>(kScale);
  std::uint64_t frac = mag % static_cast<std::uint64_t>(kScale);
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(0, static_cast<std::size_t>(kFractionDigits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += '.';
    out += f;
  }
  return out;
}

}  // namespace scraper
