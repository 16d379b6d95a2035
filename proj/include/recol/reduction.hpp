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

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "recol/coloring.hpp"
#include "recol/deadline.hpp"
#include "recol/graph.hpp"
#include "recol/subgraph_view.hpp"

namespace recol {

// Reduction log entries. Each one records enough to extend a coloring of
// the graph after the event to a coloring of the graph before it.

// Removed because its live degree was below lower_bound.
struct DegreeRemoved {
  Vertex vertex;
  std::uint32_t lower_bound;
};

// N(vertex) ⊆ N(dominator) at removal time; vertex later copies the
// dominator's color.
struct Dominated {
  Vertex vertex;
  Vertex dominator;
};

// N̄[head] with at most one non-neighbor; partner is kNoVertex when the head
// was universal.
struct Crown1 {
  Vertex head;
  Vertex partner = kNoVertex;

  std::vector<Vertex> members() const {
    if (partner == kNoVertex) return {head};
    return {head, partner};
  }
};

// Adjacent u, v sharing the non-neighbor pair {x, y}. Removes {u, v, x, y}
// as the two classes {u, x} and {v, y}.
struct Crown2 {
  Vertex u, x;
  Vertex v, y;
};

// N̄[u] was independent and became one class.
struct IndepClass {
  std::vector<Vertex> members;
};

// Independent set taken out by the driver when no rule applied.
struct ExtractedClass {
  std::vector<Vertex> members;
};

using ReductionEvent =
    std::variant<DegreeRemoved, Dominated, Crown1, Crown2, IndepClass, ExtractedClass>;

// Number of color classes an event commits (0 for degree and domination).
std::size_t classes_committed(const ReductionEvent& event) noexcept;

class ReductionTrace {
 public:
  void push(ReductionEvent event) {
    colors_consumed_ += classes_committed(event);
    events_.push_back(std::move(event));
  }
  void clear() noexcept {
    events_.clear();
    colors_consumed_ = 0;
  }

  std::span<const ReductionEvent> events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  std::size_t colors_consumed() const noexcept { return colors_consumed_; }

 private:
  std::vector<ReductionEvent> events_;
  std::size_t colors_consumed_ = 0;
};

struct ReductionConfig {
  // Domination is O(n·m); it only runs on views with at most this many
  // alive vertices.
  std::size_t domination_vertex_limit = 200;
  // Independent-set reduction only inspects vertices with at most this many
  // alive non-neighbors.
  std::size_t indset_non_neighbor_limit = 10;
};

// Cascading degree rule: deletes every vertex whose live degree falls below
// local_lb. local_lb < 1 is treated as 1.
std::size_t reduce_degree(SubgraphView& view, std::uint32_t local_lb, ReductionTrace& trace,
                          const Deadline& deadline = {});

// One scan of the domination rule. For mutual domination the larger id goes.
// Does nothing when the view is above the configured vertex limit.
std::size_t reduce_dominate(SubgraphView& view, ReductionTrace& trace,
                            const ReductionConfig& config = {}, const Deadline& deadline = {});

std::size_t reduce_crown1(SubgraphView& view, ReductionTrace& trace, const Deadline& deadline = {});
std::size_t reduce_crown2(SubgraphView& view, ReductionTrace& trace, const Deadline& deadline = {});
// Applies the independent-set rule at u alone: if u is alive, within the
// non-neighbor limit, and N̄[u] is independent, removes N̄[u] as one class.
// Returns the number of vertices removed.
std::size_t try_indset_at(SubgraphView& view, Vertex u, ReductionTrace& trace,
                          const ReductionConfig& config = {});

std::size_t reduce_indset(SubgraphView& view, ReductionTrace& trace,
                          const ReductionConfig& config = {}, const Deadline& deadline = {});

struct FixpointSummary {
  std::size_t removed_total = 0;
  std::size_t colors_consumed = 0;
};

// Applies degree, crown1, crown2, indset and (small views only) dominate in
// that order until a full sweep removes nothing or the deadline passes.
//
// local_lb must be a lower bound on the chromatic number of the alive
// subgraph on entry. Every class committed by a crown or independent-set
// event lowers that bound by one for the rest of the sweep, so the degree
// threshold used after such events is local_lb minus the classes committed
// so far in this call.
FixpointSummary run_fixpoint(SubgraphView& view, std::uint32_t local_lb, ReductionTrace& trace,
                             const Deadline& deadline = {}, const ReductionConfig& config = {});

struct ReconstructInfo {
  std::size_t kernel_colors = 0;
  std::size_t class_colors = 0;   // fresh colors opened by class events
  std::size_t degree_colors = 0;  // fresh colors opened by degree reinsertion
};

// Extends a proper coloring of the vertices alive after `events` to all of
// base's vertices by replaying the events in reverse. Kernel vertices must be
// colored and every other vertex uncolored. Throws ContractViolation if the
// result is not a proper, complete coloring.
Coloring reconstruct(const Graph& base, std::span<const ReductionEvent> events,
                     const Coloring& kernel_coloring, ReconstructInfo* info = nullptr);

}  // namespace recol
