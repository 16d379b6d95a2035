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

#include "recol/solver.hpp"

#include <chrono>
#include <optional>
#include <string>

#include "recol/deadline.hpp"
#include "recol/errors.hpp"
#include "recol/independent_set.hpp"
#include "recol/random.hpp"

namespace recol {
namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_proper(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.num_vertices()) return false;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!coloring.is_colored(u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (coloring.color_of(u) == coloring.color_of(w)) return false;
    }
  }
  return true;
}

// Kernel coloring together with the trace length it was computed at.
struct KernelWitness {
  Coloring coloring;
  std::size_t trace_position = 0;
};

}  // namespace

void validate(const SolverConfig& config) {
  if (!(config.time_limit_seconds > 0)) throw InputError("time limit must be positive");
  if (!(config.epsilon > 0 && config.epsilon <= 1)) throw InputError("epsilon must be in (0, 1]");
  if (config.sample_size == 0) throw InputError("sample size must be at least 1");
}

const char* rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::kDegree: return "degree";
    case Rule::kDominate: return "dominate";
    case Rule::kCrown1: return "crown1";
    case Rule::kCrown2: return "crown2";
    case Rule::kIndset: return "indset";
    case Rule::kExtracted: return "extracted";
  }
  return "unknown";
}

RuleCounters count_removed(std::span<const ReductionEvent> events) {
  RuleCounters counters{};
  auto bump = [&](Rule r, std::size_t k) { counters[static_cast<std::size_t>(r)] += k; };
  for (const auto& event : events) {
    if (std::holds_alternative<DegreeRemoved>(event)) {
      bump(Rule::kDegree, 1);
    } else if (std::holds_alternative<Dominated>(event)) {
      bump(Rule::kDominate, 1);
    } else if (const auto* e = std::get_if<Crown1>(&event)) {
      bump(Rule::kCrown1, e->partner == kNoVertex ? 1 : 2);
    } else if (std::holds_alternative<Crown2>(event)) {
      bump(Rule::kCrown2, 4);
    } else if (const auto* e = std::get_if<IndepClass>(&event)) {
      bump(Rule::kIndset, e->members.size());
    } else if (const auto* e = std::get_if<ExtractedClass>(&event)) {
      bump(Rule::kExtracted, e->members.size());
    }
  }
  return counters;
}

SolveResult solve(const Graph& base, const SolverConfig& config) {
  validate(config);
  const std::size_t n = base.num_vertices();
  if (n == 0) throw InputError("cannot color a graph with no vertices");

  const auto start = Clock::now();
  const Deadline deadline =
      Deadline::after(std::chrono::duration<double>(config.time_limit_seconds));

  SolveResult result;
  result.seed = config.seed;
  result.best_coloring = Coloring(n);

  if (base.num_edges() == 0) {
    for (Vertex v = 0; v < n; ++v) result.best_coloring.assign(v, 0);
    result.ans = 1;
    result.proven_lower_bound = 1;
    result.optimal = true;
    result.elapsed_seconds = seconds_since(start);
    return result;
  }

  // Trivial witness until the first round reconstructs something better.
  for (Vertex v = 0; v < n; ++v) result.best_coloring.assign(v, static_cast<Color>(v));
  result.ans = n;

  const ReductionConfig reduction_config{config.domination_vertex_limit,
                                         config.indset_non_neighbor_limit};
  const CliqueSearchParams clique_params{config.epsilon, config.sample_size};

  SubgraphView view(base);
  ReductionTrace trace;

  for (std::size_t round = 1;; ++round) {
    if (deadline.expired()) break;
    if (config.max_rounds != 0 && round > config.max_rounds) break;

    if (round > 1) view.reset();
    trace.clear();
    Rng rng = round_rng(config.seed, round);
    BoundState bounds{0, n, 0};
    std::optional<KernelWitness> witness;

    RoundRecord record;
    record.round = round;
    record.used_dsatur = round > 1;
    bool kernel_recorded = false;

    while (bounds.lb < bounds.ub && !deadline.expired()) {
      if (view.empty()) {
        if (bounds.used_colors < bounds.ub) {
          bounds.ub = bounds.used_colors;
          witness = KernelWitness{Coloring(n), trace.size()};
        }
        break;
      }

      const CliqueBound clique =
          find_clique(view, bounds.lb, bounds.used_colors, clique_params, rng, deadline);
      if (record.extractions == 0) {
        result.proven_lower_bound = std::max(result.proven_lower_bound, clique.lb);
      }

      UpperBound upper = round == 1
                             ? degeneracy_color(view, bounds.ub, bounds.used_colors, deadline)
                             : dsatur_color(view, bounds.ub, bounds.used_colors, rng, deadline);
      const std::size_t temp_ub = std::min(bounds.ub, upper.ub);
      if (upper.coloring) witness = KernelWitness{std::move(*upper.coloring), trace.size()};
      if (deadline.expired()) {
        bounds.lb = clique.lb;
        bounds.ub = temp_ub;
        break;
      }

      // The clique bound minus committed colors bounds the current graph.
      const auto local_lb = static_cast<std::uint32_t>(clique.lb - bounds.used_colors);
      const FixpointSummary reduced = run_fixpoint(view, local_lb, trace, deadline, reduction_config);
      bounds.used_colors += reduced.colors_consumed;
      if (!kernel_recorded) {
        record.kernel_size = view.alive_count();
        kernel_recorded = true;
      }

      if (reduced.removed_total > 0 || clique.lb > bounds.lb || temp_ub < bounds.ub) {
        bounds.lb = clique.lb;
        bounds.ub = temp_ub;
      } else {
        std::vector<Vertex> extracted = find_independent_set(view, round, rng);
        for (Vertex v : extracted) view.delete_vertex(v);
        trace.push(ExtractedClass{std::move(extracted)});
        ++bounds.used_colors;
        ++record.extractions;
      }
    }

    bool improved = false;
    if (witness) {
      const auto prefix = trace.events().first(witness->trace_position);
      Coloring coloring = reconstruct(base, prefix, witness->coloring);
      record.colors = coloring.num_colors();
      if (coloring.num_colors() < result.ans) {
        result.ans = coloring.num_colors();
        result.best_coloring = std::move(coloring);
        result.time_to_best_seconds = seconds_since(start);
        improved = true;
      }
    }
    record.lb = bounds.lb;
    record.ub = bounds.ub;
    record.removed = count_removed(trace.events());
    record.elapsed_seconds = seconds_since(start);
    result.rounds = round;
    if (round <= config.trajectory_limit || improved) result.trajectory.push_back(record);

    if (result.ans <= result.proven_lower_bound) break;
    if (config.target_colors != 0 && result.ans <= config.target_colors) break;
  }

  result.optimal = result.ans <= result.proven_lower_bound;
  result.elapsed_seconds = seconds_since(start);
  return result;
}

const Coloring& best_coloring_certificate(const Graph& base, const SolveResult& result) {
  const Coloring& coloring = result.best_coloring;
  if (!is_proper(base, coloring)) {
    throw InvariantError("stored witness is not a proper coloring");
  }
  if (coloring.num_colors() != result.ans) {
    throw InvariantError("stored witness uses " + std::to_string(coloring.num_colors()) +
                         " colors, expected " + std::to_string(result.ans));
  }
  return coloring;
}

}  // namespace recol
