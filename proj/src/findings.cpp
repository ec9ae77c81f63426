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

#include "findings.hpp"

#include <algorithm>

namespace scraper {

const char* to_string(Level level) {
  switch (level) {
    case Level::kInfo: return "INFO";
    case Level::kWarn: return "WARN";
    case Level::kError: return "ERROR";
  }
  return "?";
}

std::string Finding::format() const {
  std::string out = to_string(level);
  out += " env=";
  out += env ? std::to_string(*env) : "-";
  out += " step=";
  out += step ? std::to_string(*step) : "-";
  out += ' ';
  out += message;
  return out;
}

bool has_blocking(const Report& report) {
  return std::any_of(report.begin(), report.end(), [](const Finding& f) { return f.level == Level::kError; });
}

}  // namespace scraper
