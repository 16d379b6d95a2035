// Copyright 2026 The RECOL Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// recol: color a graph file under a wall-clock budget.
//
// Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
// 3 internal invariant failure (including a failed --verify).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recol/errors.hpp"
#include "recol/io.hpp"
#include "recol/oracle.hpp"
#include "recol/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// "A..B" inclusive, or a single number.
std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  try {
    if (dots == std::string::npos) {
      first = last = std::stoull(text);
    } else {
      first = std::stoull(text.substr(0, dots));
      last = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--seeds", "expected A..B, got '" + text + "'");
  }
  if (last < first) throw CLI::ValidationError("--seeds", "empty range '" + text + "'");
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = first; s <= last; ++s) seeds.push_back(s);
  return seeds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction-based anytime graph coloring"};

  std::string input;
  std::string format_name = "auto";
  recol::SolverConfig config;
  std::optional<std::string> output_path;
  std::optional<std::string> stats_path;
  bool verify = false;
  bool no_timing = false;
  bool quiet = false;
  std::size_t runs = 1;
  std::string seed_range;

  app.add_option("input", input, "Graph file (DIMACS .col or edge list)")->required();
  app.add_option("--format", format_name, "Input format")
      ->check(CLI::IsMember({"auto", "col", "edges"}))
      ->capture_default_str();
  app.add_option("--time-limit", config.time_limit_seconds, "Wall-clock budget per run, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--runs", runs, "Number of runs with consecutive seeds starting at --seed")
      ->check(CLI::PositiveNumber);
  app.add_option("--seeds", seed_range, "Inclusive seed range A..B for batch runs")
      ->excludes("--runs");
  app.add_option("--max-rounds", config.max_rounds, "Stop after this many rounds (0 = no cap)");
  app.add_option("--target", config.target_colors, "Stop once this many colors suffice (0 = off)");
  app.add_option("--output", output_path, "Write the best coloring here");
  app.add_option("--stats", stats_path, "Write run statistics here (JSON lines)");
  app.add_flag("--verify", verify, "Re-check the final coloring with the independent verifier");
  app.add_flag("--no-timing", no_timing, "Omit wall-clock fields from the statistics");
  app.add_flag("-q,--quiet", quiet, "Only print the summary");

  std::vector<std::uint64_t> seeds;
  try {
    app.parse(argc, argv);
    if (!seed_range.empty()) {
      seeds = parse_seed_range(seed_range);
    } else {
      for (std::size_t i = 0; i < runs; ++i) seeds.push_back(config.seed + i);
    }
    recol::validate(config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const recol::InputError& e) {
    std::cerr << "recol: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto format = format_name == "col"     ? recol::io::Format::kDimacs
                      : format_name == "edges" ? recol::io::Format::kEdgeList
                                               : recol::io::Format::kAuto;

  recol::io::ParsedGraph parsed;
  try {
    parsed = recol::io::load_graph(input, format);
  } catch (const recol::ParseError& e) {
    std::cerr << "recol: " << input << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "recol: " << e.what() << '\n';
    return kExitInput;
  }
  for (const auto& warning : parsed.warnings) std::cerr << "recol: warning: " << warning << '\n';
  if (parsed.graph.num_vertices() == 0) {
    std::cerr << "recol: " << input << ": graph has no vertices\n";
    return kExitInput;
  }

  const std::string instance = std::filesystem::path(input).stem().string();
  const recol::io::StatsOptions stats_options{!no_timing};

  std::ofstream stats_out;
  if (stats_path) {
    stats_out.open(*stats_path);
    if (!stats_out) {
      std::cerr << "recol: cannot write '" << *stats_path << "'\n";
      return kExitInput;
    }
  }

  std::vector<recol::io::RunStats> all_stats;
  std::optional<recol::SolveResult> best;
  try {
    for (std::uint64_t seed : seeds) {
      config.seed = seed;
      recol::SolveResult result = recol::solve(parsed.graph, config);
      const recol::Coloring& certificate = recol::best_coloring_certificate(parsed.graph, result);
      if (verify && !recol::oracle::verify_coloring(parsed.graph, certificate)) {
        std::cerr << "recol: verification failed for seed " << seed << '\n';
        return kExitInternal;
      }
      auto stats = recol::io::make_run_stats(instance, parsed.graph, config, result);
      if (stats_path) recol::io::emit_stats(stats, stats_out, stats_options);
      if (!quiet) {
        std::cout << instance << "\tseed=" << seed << "\tcolors=" << result.ans
                  << "\tlower_bound=" << result.proven_lower_bound
                  << "\trounds=" << result.rounds << "\ttime_to_best=" << result.time_to_best_seconds
                  << '\n';
      }
      all_stats.push_back(std::move(stats));
      if (!best || result.ans < best->ans) best = std::move(result);
    }
  } catch (const recol::InvariantError& e) {
    std::cerr << "recol: internal invariant failed: " << e.what() << '\n';
    return kExitInternal;
  } catch (const recol::ContractViolation& e) {
    std::cerr << "recol: internal invariant failed: " << e.what() << '\n';
    return kExitInternal;
  }

  if (seeds.size() > 1) {
    const auto summary = recol::io::summarize(all_stats);
    if (stats_path) recol::io::emit_summary(summary, stats_out);
    std::cout << "instance\tn\tm\tmin\tavg\thit\n" << recol::io::summary_row(summary) << '\n';
  }

  if (output_path) {
    std::ofstream out(*output_path);
    if (!out) {
      std::cerr << "recol: cannot write '" << *output_path << "'\n";
      return kExitInput;
    }
    recol::io::write_coloring(best->best_coloring, parsed.labels, out);
  }
  return kExitOk;
}
