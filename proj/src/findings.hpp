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
#include <string>
#include <vector>

namespace scraper {

enum class Level { kInfo, kWarn, kError };

const char* to_string(Level level);

// A non-fatal data-quality annotation. ERROR findings block expansion.
struct Finding {
  Level level = Level::kWarn;
  std::optional<std::uint32_t> env;
  std::optional<std::uint64_t> step;
  std::string message;

  // `LEVEL env=<e> step=<s> <message>`; unknown env/step print as '-'.
  std::string format() const;
  friend bool operator==(const Finding&, const Finding&) = default;
};

using Report = std::vector<Finding>;

bool has_blocking(const Report& report);

}  // namespace scraper
