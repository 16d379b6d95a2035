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

#include "recol/reduction.hpp"

#include <algorithm>
#include <string>

#include "recol/errors.hpp"

namespace recol {
namespace {

constexpr std::size_t kDeadlineStride = 4096;

// Counts deletions and polls the deadline every kDeadlineStride of them.
class DeletionBudget {
 public:
  explicit DeletionBudget(const Deadline& deadline) : deadline_(deadline) {}

  bool tick() {
    if (++count_ % kDeadlineStride != 0) return true;
    return !deadline_.expired();
  }
  std::size_t count() const noexcept { return count_; }

 private:
  const Deadline& deadline_;
  std::size_t count_ = 0;
};

std::vector<Vertex> snapshot(const SubgraphView& view) {
  const auto alive = view.alive_vertices();
  return {alive.begin(), alive.end()};
}

}  // namespace

std::size_t classes_committed(const ReductionEvent& event) noexcept {
  struct {
    std::size_t operator()(const DegreeRemoved&) const { return 0; }
    std::size_t operator()(const Dominated&) const { return 0; }
    std::size_t operator()(const Crown1&) const { return 1; }
    std::size_t operator()(const Crown2&) const { return 2; }
    std::size_t operator()(const IndepClass&) const { return 1; }
    std::size_t operator()(const ExtractedClass&) const { return 1; }
  } visitor;
  return std::visit(visitor, event);
}

std::size_t reduce_degree(SubgraphView& view, std::uint32_t local_lb, ReductionTrace& trace,
                          const Deadline& deadline) {
  const std::uint32_t threshold = std::max<std::uint32_t>(local_lb, 1);
  std::vector<Vertex> queue;
  for (Vertex v : view.alive_vertices()) {
    if (view.live_degree(v) < threshold) queue.push_back(v);
  }

  DeletionBudget budget(deadline);
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!view.alive(v)) continue;
    view.delete_vertex(v);
    trace.push(DegreeRemoved{v, threshold});
    // A neighbor enters the queue exactly when its degree crosses the threshold.
    view.for_each_live_neighbor(v, [&](Vertex w) {
      if (view.live_degree(w) + 1 == threshold) queue.push_back(w);
    });
    if (!budget.tick()) break;
  }
  return budget.count();
}

std::size_t reduce_dominate(SubgraphView& view, ReductionTrace& trace,
                            const ReductionConfig& config, const Deadline& deadline) {
  if (view.alive_count() > config.domination_vertex_limit) return 0;

  const std::vector<Vertex> vertices = snapshot(view);
  // Live adjacency of the snapshot; entries for vertices deleted during the
  // scan are skipped on the fly.
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    view.for_each_live_neighbor(vertices[i], [&](Vertex w) { adj[i].push_back(w); });
  }
  auto adjacent = [&](std::size_t i, Vertex w) {
    return std::binary_search(adj[i].begin(), adj[i].end(), w);
  };
  // N(u) ⊆ N(v) over alive vertices, by merge scan.
  auto subset = [&](std::size_t iu, std::size_t iv) {
    const auto& a = adj[iu];
    const auto& b = adj[iv];
    auto jb = b.begin();
    for (Vertex w : a) {
      if (!view.alive(w)) continue;
      while (jb != b.end() && *jb < w) ++jb;
      if (jb == b.end() || *jb != w) return false;
    }
    return true;
  };

  auto index_of = [&](Vertex w) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), w) -
                                    vertices.begin());
  };
  auto try_dominator = [&](std::size_t iu, Vertex v) {
    const Vertex u = vertices[iu];
    if (v == u || !view.alive(v)) return false;
    if (view.live_degree(u) > view.live_degree(v)) return false;
    if (adjacent(iu, v)) return false;
    const std::size_t iv = index_of(v);
    if (!subset(iu, iv)) return false;
    // Equal neighborhoods: only the larger id of the pair may go.
    if (view.live_degree(u) == view.live_degree(v) && u < v) return false;
    view.delete_vertex(u);
    trace.push(Dominated{u, v});
    return true;
  };

  DeletionBudget budget(deadline);
  for (std::size_t iu = 0; iu < vertices.size(); ++iu) {
    const Vertex u = vertices[iu];
    if (!view.alive(u)) continue;
    // Any dominator is adjacent to every live neighbor of u, so scanning the
    // neighbors of u's sparsest live neighbor is enough.
    std::size_t pivot = vertices.size();
    for (Vertex w : adj[iu]) {
      if (!view.alive(w)) continue;
      const std::size_t iw = index_of(w);
      if (pivot == vertices.size() || adj[iw].size() < adj[pivot].size()) pivot = iw;
    }
    if (pivot == vertices.size()) {
      for (Vertex v : vertices) {
        if (try_dominator(iu, v)) break;
      }
    } else {
      for (Vertex v : adj[pivot]) {
        if (try_dominator(iu, v)) break;
      }
    }
    if (!view.alive(u) && !budget.tick()) break;
  }
  return budget.count();
}

std::size_t reduce_crown1(SubgraphView& view, ReductionTrace& trace, const Deadline& deadline) {
  DeletionBudget budget(deadline);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex u : snapshot(view)) {
      if (!view.alive(u) || non_neighbor_count(view, u) > 1) continue;
      Crown1 event{u};
      if (non_neighbor_count(view, u) == 1) {
        for (Vertex w : complement_closed_neighborhood(view, u)) {
          if (w != u) event.partner = w;
        }
      }
      view.delete_vertex(u);
      bool in_time = budget.tick();
      if (event.partner != kNoVertex) {
        view.delete_vertex(event.partner);
        in_time = budget.tick() && in_time;
      }
      trace.push(event);
      changed = true;
      if (!in_time) return budget.count();
    }
  }
  return budget.count();
}

std::size_t reduce_crown2(SubgraphView& view, ReductionTrace& trace, const Deadline& deadline) {
  DeletionBudget budget(deadline);
  for (Vertex u : snapshot(view)) {
    if (!view.alive(u) || non_neighbor_count(view, u) != 2) continue;
    Vertex x = kNoVertex;
    Vertex y = kNoVertex;
    for (Vertex w : complement_closed_neighborhood(view, u)) {
      if (w == u) continue;
      (x == kNoVertex ? x : y) = w;
    }
    Vertex partner = kNoVertex;
    view.for_each_live_neighbor(u, [&](Vertex v) {
      if (partner != kNoVertex || non_neighbor_count(view, v) != 2) return;
      if (!view.adjacent(v, x) && !view.adjacent(v, y)) partner = v;
    });
    if (partner == kNoVertex) continue;

    bool in_time = true;
    for (Vertex w : {u, partner, x, y}) {
      view.delete_vertex(w);
      in_time = budget.tick() && in_time;
    }
    trace.push(Crown2{u, x, partner, y});
    if (!in_time) break;
  }
  return budget.count();
}

std::size_t try_indset_at(SubgraphView& view, Vertex u, ReductionTrace& trace,
                          const ReductionConfig& config) {
  if (!view.alive(u) || non_neighbor_count(view, u) > config.indset_non_neighbor_limit) return 0;
  std::vector<Vertex> members = complement_closed_neighborhood(view, u);
  if (!is_independent(view, members)) return 0;
  for (Vertex w : members) view.delete_vertex(w);
  const std::size_t removed = members.size();
  trace.push(IndepClass{std::move(members)});
  return removed;
}

std::size_t reduce_indset(SubgraphView& view, ReductionTrace& trace,
                          const ReductionConfig& config, const Deadline& deadline) {
  std::size_t removed = 0;
  for (Vertex u : snapshot(view)) {
    const std::size_t k = try_indset_at(view, u, trace, config);
    removed += k;
    if (k > 0 && deadline.expired()) break;
  }
  return removed;
}

FixpointSummary run_fixpoint(SubgraphView& view, std::uint32_t local_lb, ReductionTrace& trace,
                             const Deadline& deadline, const ReductionConfig& config) {
  FixpointSummary summary;
  const std::size_t consumed_at_start = trace.colors_consumed();
  auto degree_threshold = [&]() -> std::uint32_t {
    const std::size_t consumed = trace.colors_consumed() - consumed_at_start;
    return consumed >= local_lb ? 1 : static_cast<std::uint32_t>(local_lb - consumed);
  };

  for (;;) {
    std::size_t removed = 0;
    if (deadline.expired()) break;
    removed += reduce_degree(view, degree_threshold(), trace, deadline);
    if (deadline.expired()) {
      summary.removed_total += removed;
      break;
    }
    removed += reduce_crown1(view, trace, deadline);
    if (!deadline.expired()) removed += reduce_crown2(view, trace, deadline);
    if (!deadline.expired()) removed += reduce_indset(view, trace, config, deadline);
    if (!deadline.expired() && view.alive_count() <= config.domination_vertex_limit) {
      removed += reduce_dominate(view, trace, config, deadline);
    }
    summary.removed_total += removed;
    if (removed == 0) break;
  }
  summary.colors_consumed = trace.colors_consumed() - consumed_at_start;
  return summary;
}

Coloring reconstruct(const Graph& base, std::span<const ReductionEvent> events,
                     const Coloring& kernel_coloring, ReconstructInfo* info) {
  const std::size_t n = base.num_vertices();
  if (kernel_coloring.size() != n) {
    throw ContractViolation("reconstruct: kernel coloring has " +
                            std::to_string(kernel_coloring.size()) + " slots, graph has " +
                            std::to_string(n) + " vertices");
  }
  Coloring coloring = kernel_coloring;
  coloring.normalize();
  ReconstructInfo local;
  local.kernel_colors = coloring.num_colors();
  Color next = coloring.next_free_color();

  auto place = [&](Vertex v, Color c) {
    if (coloring.is_colored(v)) {
      throw ContractViolation("reconstruct: vertex " + std::to_string(v) +
                              " is colored before its event is replayed");
    }
    coloring.assign(v, c);
  };

  std::vector<std::uint64_t> seen;  // per-color stamp for first-fit
  std::uint64_t stamp = 0;

  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (const auto* e = std::get_if<DegreeRemoved>(&*it)) {
      ++stamp;
      seen.resize(static_cast<std::size_t>(next) + 1, 0);
      for (Vertex w : base.neighbors(e->vertex)) {
        if (coloring.is_colored(w)) seen[static_cast<std::size_t>(coloring.color_of(w))] = stamp;
      }
      Color c = 0;
      while (c < next && seen[static_cast<std::size_t>(c)] == stamp) ++c;
      if (c == next) {
        ++next;
        ++local.degree_colors;
      }
      place(e->vertex, c);
    } else if (const auto* e = std::get_if<Dominated>(&*it)) {
      if (!coloring.is_colored(e->dominator)) {
        throw ContractViolation("reconstruct: dominator " + std::to_string(e->dominator) +
                                " of vertex " + std::to_string(e->vertex) + " is uncolored");
      }
      place(e->vertex, coloring.color_of(e->dominator));
    } else if (const auto* e = std::get_if<Crown1>(&*it)) {
      for (Vertex v : e->members()) place(v, next);
      ++next;
      ++local.class_colors;
    } else if (const auto* e = std::get_if<Crown2>(&*it)) {
      place(e->u, next);
      place(e->x, next);
      ++next;
      place(e->v, next);
      place(e->y, next);
      ++next;
      local.class_colors += 2;
    } else if (const auto* e = std::get_if<IndepClass>(&*it)) {
      for (Vertex v : e->members) place(v, next);
      ++next;
      ++local.class_colors;
    } else if (const auto* e = std::get_if<ExtractedClass>(&*it)) {
      for (Vertex v : e->members) place(v, next);
      ++next;
      ++local.class_colors;
    }
  }

  if (coloring.num_colored() != n) {
    throw ContractViolation("reconstruct: " + std::to_string(n - coloring.num_colored()) +
                            " vertices left uncolored");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : base.neighbors(u)) {
      if (u < w && coloring.color_of(u) == coloring.color_of(w)) {
        throw ContractViolation("reconstruct: edge (" + std::to_string(u) + ", " +
                                std::to_string(w) + ") is monochromatic");
      }
    }
  }
  coloring.normalize();
  if (info) *info = local;
  return coloring;
}

}  // namespace recol
