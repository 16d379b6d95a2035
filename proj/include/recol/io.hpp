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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recol/coloring.hpp"
#include "recol/graph.hpp"
#include "recol/solver.hpp"

namespace recol::io {

// Bijection between external integer labels and dense ids 0..n-1, ids
// handed out in order of first appearance.
class LabelMap {
 public:
  // Labels 1..n mapped to ids 0..n-1, as in DIMACS files.
  static LabelMap one_based(std::size_t n);

  Vertex intern(std::int64_t label);
  std::optional<Vertex> find(std::int64_t label) const;
  std::int64_t label_of(Vertex id) const { return labels_[id]; }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::int64_t> labels_;
  std::unordered_map<std::int64_t, Vertex> ids_;
};

struct ParsedGraph {
  Graph graph;
  LabelMap labels;
  std::vector<std::string> warnings;
};

enum class Format { kAuto, kDimacs, kEdgeList };

// DIMACS .col: "c" comment lines, one "p edge <n> <m>" line before any
// "e <u> <v>" line, endpoints 1-based. Throws ParseError with the line
// number on a missing problem line, a malformed line, or an endpoint
// outside [1, n]. A declared edge count that differs from the cleaned count
// produces a warning.
ParsedGraph parse_dimacs_col(std::istream& in);

// Whitespace-separated integer label pairs, one per line, "#" comments.
// Tokens after the second on a line are ignored.
ParsedGraph parse_edge_list(std::istream& in);

// Format that `auto` resolves to: DIMACS if the first line that is neither
// blank nor a comment is a "p" line.
Format detect_format(std::istream& in);

// Reads a file, resolving kAuto by detect_format. Throws ParseError, or
// std::runtime_error if the file cannot be opened.
ParsedGraph load_graph(const std::string& path, Format format = Format::kAuto);

// "s <k>" followed by "<label> <color>" for every vertex in id order.
// Throws InputError on an empty or incomplete coloring.
// Graph writers; parse_dimacs_col / parse_edge_list read their output back.
void write_dimacs(const Graph& graph, std::ostream& out);
void write_edge_list(const Graph& graph, const LabelMap& labels, std::ostream& out);

void write_coloring(const Coloring& coloring, const LabelMap& labels, std::ostream& out);

struct RunStats {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double time_limit_seconds = 0;
  std::size_t ans = 0;
  std::size_t proven_lower_bound = 0;
  bool optimal = false;
  double time_to_best_seconds = 0;
  double elapsed_seconds = 0;
  std::size_t rounds = 0;
  std::vector<RoundRecord> trajectory;
  RuleCounters removed_total{};  // summed over recorded rounds
};

RunStats make_run_stats(const std::string& instance, const Graph& graph, const SolverConfig& config,
                        const SolveResult& result);

struct StatsOptions {
  // Wall-clock fields vary between otherwise identical runs.
  bool include_timing = true;
};

// One JSON document on a single line; schema in docs/stats-schema.md.
void emit_stats(const RunStats& stats, std::ostream& out, const StatsOptions& options = {});

// Aggregate over repeated runs of one instance: best, mean and the number of
// runs that reached the best.
struct BatchSummary {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint64_t> seeds;
  std::size_t min = 0;
  double avg = 0;
  std::size_t hits = 0;
};

BatchSummary summarize(const std::vector<RunStats>& runs);
void emit_summary(const BatchSummary& summary, std::ostream& out);
// Tab-separated "instance n m min avg hits" row.
std::string summary_row(const BatchSummary& summary);

}  // namespace recol::io
