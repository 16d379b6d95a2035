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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "recol/bounds.hpp"
#include "recol/coloring.hpp"
#include "recol/graph.hpp"
#include "recol/reduction.hpp"

namespace recol {

struct SolverConfig {
  double time_limit_seconds = 60.0;
  std::uint64_t seed = 0;
  double epsilon = 0.01;
  std::size_t sample_size = 64;
  std::size_t domination_vertex_limit = 200;
  std::size_t indset_non_neighbor_limit = 10;

  // Optional stopping rules beyond the time limit; 0 disables each.
  std::size_t max_rounds = 0;
  // Stop as soon as a coloring with at most this many colors is found.
  std::size_t target_colors = 0;

  // Per-round records kept for every round up to this count; later rounds
  // are recorded only when they improve the answer.
  std::size_t trajectory_limit = 10000;
};

// Validates a config; throws InputError on a non-positive time limit or
// epsilon outside (0, 1].
void validate(const SolverConfig& config);

enum class Rule : std::uint8_t { kDegree, kDominate, kCrown1, kCrown2, kIndset, kExtracted };
inline constexpr std::size_t kRuleCount = 6;
const char* rule_name(Rule rule) noexcept;

using RuleCounters = std::array<std::size_t, kRuleCount>;

// Vertices removed per rule by the given events.
RuleCounters count_removed(std::span<const ReductionEvent> events);

struct RoundRecord {
  std::size_t round = 0;
  std::size_t lb = 0;
  std::size_t ub = 0;
  std::size_t kernel_size = 0;  // alive vertices after the round's first fixpoint
  std::size_t colors = 0;       // reconstructed colors, 0 if the round produced no witness
  std::size_t extractions = 0;
  bool used_dsatur = false;
  double elapsed_seconds = 0;
  RuleCounters removed{};
};

struct SolveResult {
  std::size_t ans = 0;
  Coloring best_coloring;
  std::size_t rounds = 0;
  std::vector<RoundRecord> trajectory;
  std::uint64_t seed = 0;
  double time_to_best_seconds = 0;
  double elapsed_seconds = 0;
  // Largest clique bound seen before any extraction in a round, so a true
  // lower bound on the chromatic number; 0 if none was established.
  std::size_t proven_lower_bound = 0;
  bool optimal = false;  // ans == proven_lower_bound
};

// Anytime reduce-bound-extract loop. Each round restarts from the full graph,
// alternates clique lower bounds, greedy upper bounds (smallest-last in round
// 1, randomized DSatur afterwards) and reductions, and extracts an
// independent set whenever nothing improves. The best reconstructed coloring
// over all rounds is returned.
//
// Stops at the time limit, after max_rounds, at target_colors, or once the
// answer matches the proven lower bound. Throws InputError on an empty graph.
SolveResult solve(const Graph& base, const SolverConfig& config = {});

// The stored witness, re-verified; throws InvariantError if it is not a
// proper coloring with exactly result.ans colors.
const Coloring& best_coloring_certificate(const Graph& base, const SolveResult& result);

}  // namespace recol
