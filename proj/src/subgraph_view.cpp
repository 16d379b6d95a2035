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

#include "recol/subgraph_view.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "recol/errors.hpp"

namespace recol {

SubgraphView::SubgraphView(const Graph& base) : base_(&base) { reset(); }

void SubgraphView::reset() {
  const std::size_t n = base_->num_vertices();
  alive_.assign(n, 1);
  live_degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) live_degree_[v] = static_cast<std::uint32_t>(base_->degree(v));
  alive_count_ = n;
  alive_list_.resize(n);
  std::iota(alive_list_.begin(), alive_list_.end(), Vertex{0});
  local_index_.resize(n);
  std::iota(local_index_.begin(), local_index_.end(), std::uint32_t{0});
  list_dirty_ = false;
}

void SubgraphView::delete_vertex(Vertex v) {
  if (v >= alive_.size() || !alive_[v]) {
    throw ContractViolation("delete_vertex: vertex " + std::to_string(v) + " is not alive");
  }
  alive_[v] = 0;
  --alive_count_;
  for (Vertex w : base_->neighbors(v)) {
    if (alive_[w]) --live_degree_[w];
  }
  list_dirty_ = true;
}

std::span<const Vertex> SubgraphView::alive_vertices() const {
  if (list_dirty_) {
    std::erase_if(alive_list_, [this](Vertex v) { return !alive_[v]; });
    for (std::uint32_t i = 0; i < alive_list_.size(); ++i) local_index_[alive_list_[i]] = i;
    list_dirty_ = false;
  }
  return alive_list_;
}

std::size_t non_neighbor_count(const SubgraphView& view, Vertex u) {
  return view.alive_count() - 1 - view.live_degree(u);
}

std::vector<Vertex> complement_closed_neighborhood(const SubgraphView& view, Vertex u) {
  if (!view.alive(u)) {
    throw ContractViolation("complement_closed_neighborhood: vertex " + std::to_string(u) +
                            " is not alive");
  }
  std::vector<Vertex> result;
  result.reserve(non_neighbor_count(view, u) + 1);
  const auto adj = view.base().neighbors(u);
  auto it = adj.begin();
  // Both ranges are sorted, so a single merge pass finds the non-neighbors.
  for (Vertex v : view.alive_vertices()) {
    while (it != adj.end() && *it < v) ++it;
    if (it != adj.end() && *it == v) continue;
    result.push_back(v);
  }
  return result;
}

bool is_independent(const SubgraphView& view, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (view.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_clique(const SubgraphView& view, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !view.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

InducedGraph induced_subgraph(const SubgraphView& view) {
  InducedGraph out;
  const auto alive = view.alive_vertices();
  out.original.assign(alive.begin(), alive.end());
  std::vector<Edge> edges;
  for (Vertex u : alive) {
    view.for_each_live_neighbor(u, [&](Vertex w) {
      if (u < w) edges.emplace_back(view.local_index(u), view.local_index(w));
    });
  }
  out.graph = build_graph(alive.size(), edges);
  return out;
}

}  // namespace recol
