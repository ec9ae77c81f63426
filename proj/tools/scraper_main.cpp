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

// Command-line front end. Talks to the library only through the C API.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "scraper/scraper.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitEnvironment = 2;

int exit_for(scraper_status s) {
  switch (s) {
    case SCRAPER_OK: return kExitOk;
    case SCRAPER_E_INVALID_ARGUMENT:
    case SCRAPER_E_IO:
    case SCRAPER_E_INTERNAL: return kExitEnvironment;
    default: return kExitDomain;
  }
}

int report_error(scraper_status s) {
  std::cerr << "scraper: " << scraper_status_string(s) << ": " << scraper_last_error() << "\n";
  return exit_for(s);
}

void print_report(const scraper_report* r, std::ostream& os) {
  for (size_t i = 0; i < scraper_report_size(r); ++i) os << scraper_report_line(r, i) << "\n";
}

int cmd_validate(const std::string& run_dir) {
  scraper_report* report = nullptr;
  if (auto s = scraper_validate(run_dir.c_str(), &report); s != SCRAPER_OK) return report_error(s);
  print_report(report, std::cout);
  const bool clean = scraper_report_size(report) == 0;
  scraper_report_free(report);
  return clean ? kExitOk : kExitDomain;
}

struct ExpandArgs {
  std::string run_dir, out_dir, profile;
  unsigned jobs = 1;
  bool delete_frames = false;
};

int cmd_expand(const ExpandArgs& a) {
  scraper_expand_options opts{a.out_dir.empty() ? nullptr : a.out_dir.c_str(),
                              a.profile.empty() ? nullptr : a.profile.c_str(), a.jobs, a.delete_frames ? 1 : 0};
  scraper_expand_result result{};
  scraper_report* report = nullptr;
  if (auto s = scraper_expand(a.run_dir.c_str(), &opts, &result, &report); s != SCRAPER_OK) return report_error(s);
  print_report(report, result.refused ? std::cout : std::cerr);
  scraper_report_free(report);
  if (result.refused) {
    std::cerr << "scraper: expand refused\n";
    return kExitDomain;
  }
  std::cout << "expanded " << result.records << " records into " << result.outputs << " files";
  if (a.delete_frames) std::cout << ", deleted " << result.frames_deleted << " frames";
  std::cout << "\n";
  return kExitOk;
}

int open_table(const std::string& path, scraper_table** table) {
  if (auto s = scraper_table_open(path.c_str(), table); s != SCRAPER_OK) return report_error(s);
  return kExitOk;
}

int cmd_summarize(const std::string& path, std::optional<size_t> top, std::optional<size_t> bottom) {
  scraper_table* table = nullptr;
  if (int rc = open_table(path, &table)) return rc;
  scraper_summary_options opts{top || bottom ? 1 : 0, top.value_or(0), bottom.value_or(0)};
  scraper_summary* summary = nullptr;
  const auto s = scraper_summarize(table, &opts, &summary);
  scraper_table_free(table);
  if (s != SCRAPER_OK) return report_error(s);

  std::cout << std::left << std::setw(6) << "rank" << std::right << std::setw(5) << "env" << std::setw(6) << "game"
            << std::setw(14) << "reward" << std::setw(8) << "steps" << std::setw(7) << "lives" << std::setw(10)
            << "end_step" << "  status\n";
  for (size_t i = 0; i < scraper_summary_size(summary); ++i) {
    scraper_game_row row{};
    scraper_summary_row(summary, i, &row);
    std::cout << std::left << std::setw(6) << (*row.rank ? row.rank : "-") << std::right << std::setw(5) << row.env
              << std::setw(6) << row.game_number << std::setw(14) << row.reward << std::setw(8) << row.steps
              << std::setw(7) << row.lives_used << std::setw(10) << row.end_step << "  "
              << (row.complete ? "complete" : "incomplete") << "\n";
  }
  scraper_summary_free(summary);
  return kExitOk;
}

bool write_text(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  return static_cast<bool>(out);
}

int cmd_plot(const std::string& path, const std::string& figure, const std::string& out, bool svg, size_t k) {
  scraper_table* table = nullptr;
  if (int rc = open_table(path, &table)) return rc;
  char* json = nullptr;
  char* svg_text = nullptr;
  const auto s = scraper_plot(table, figure.c_str(), k, &json, svg ? &svg_text : nullptr);
  scraper_table_free(table);
  if (s != SCRAPER_OK) return report_error(s);
  int rc = kExitOk;
  if (!write_text(out, json)) {
    std::cerr << "scraper: cannot write " << out << "\n";
    rc = kExitEnvironment;
  }
  if (svg_text) {
    const std::string svg_path = std::filesystem::path(out).replace_extension(".svg").string();
    if (!write_text(svg_path, svg_text)) {
      std::cerr << "scraper: cannot write " << svg_path << "\n";
      rc = kExitEnvironment;
    }
  }
  scraper_string_free(json);
  scraper_string_free(svg_text);
  return rc;
}

int cmd_synth(const std::string& name, const std::string& out) {
  if (auto s = scraper_synth(name.c_str(), out.c_str()); s != SCRAPER_OK) return report_error(s);
  std::cout << "wrote scenario " << name << " to " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame scraper: raw RL run logs to enriched per-step tables"};
  app.require_subcommand(1, 1);

  std::string run_dir;
  auto* validate = app.add_subcommand("validate", "Check a raw run directory");
  validate->add_option("run_dir", run_dir, "Run directory")->required();

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Enrich a raw run from its frames");
  expand->add_option("run_dir", ex.run_dir, "Run directory")->required();
  expand->add_option("--out", ex.out_dir, "Output directory (default: the run directory)");
  expand->add_option("--profile", ex.profile, "Game profile JSON");
  expand->add_option("--jobs", ex.jobs, "Frame analysis workers")->check(CLI::PositiveNumber);
  expand->add_flag("--delete-frames", ex.delete_frames, "Remove frames after the outputs are written");

  std::string table_path;
  std::optional<size_t> top, bottom;
  auto* summarize = app.add_subcommand("summarize", "Per-game table of an enriched CSV");
  summarize->add_option("enriched", table_path, "Enriched CSV")->required();
  summarize->add_option("--top", top, "Best K complete games");
  summarize->add_option("--bottom", bottom, "Worst K complete games");

  std::string figure, plot_out;
  bool svg = false;
  size_t k = 3;
  auto* plot = app.add_subcommand("plot", "Emit plot data for a figure kind");
  plot->add_option("enriched", table_path, "Enriched CSV")->required();
  plot->add_option("--figure", figure, "game-summary, per-env-quality, best-worst, miss-distance, score-curve")
      ->required();
  plot->add_option("--out", plot_out, "PlotDataset JSON path")->required();
  plot->add_option("--k", k, "Games per side for best-worst");
  plot->add_flag("--svg", svg, "Also render an SVG next to the JSON");

  std::string scenario, synth_out;
  auto* synth = app.add_subcommand("synth", "Write a scripted synthetic run with oracle outputs");
  synth->add_option("scenario", scenario, "Scenario name")->required();
  synth->add_option("--out", synth_out, "Output run directory")->required();
  synth->footer([] {
    std::string s = "Scenarios:";
    for (size_t i = 0; i < scraper_synth_scenario_count(); ++i) s += std::string(" ") + scraper_synth_scenario_name(i);
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitEnvironment;
  }

  if (validate->parsed()) return cmd_validate(run_dir);
  if (expand->parsed()) return cmd_expand(ex);
  if (summarize->parsed()) return cmd_summarize(table_path, top, bottom);
  if (plot->parsed()) return cmd_plot(table_path, figure, plot_out, svg, k);
  if (synth->parsed()) return cmd_synth(scenario, synth_out);
  return kExitEnvironment;
}
