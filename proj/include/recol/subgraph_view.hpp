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
#include <vector>

#include "recol/graph.hpp"

namespace recol {

// Vertex-deletion view over a Graph.
//
// Keeps an alive mask and, for every alive vertex, the number of alive
// neighbors. The base graph is never copied; reset() restores the full
// graph in O(n).
//
// alive_vertices() returns the alive set in ascending id order. The list is
// compacted lazily after deletions, and compaction also assigns each alive
// vertex a dense local index in [0, alive_count()) so algorithms can use
// per-call arrays sized to the alive set. Local indices are stale after any
// deletion until alive_vertices() is called again.
class SubgraphView {
 public:
  explicit SubgraphView(const Graph& base);

  const Graph& base() const noexcept { return *base_; }

  bool alive(Vertex v) const noexcept { return alive_[v] != 0; }
  std::uint32_t live_degree(Vertex v) const noexcept { return live_degree_[v]; }
  std::size_t alive_count() const noexcept { return alive_count_; }
  bool empty() const noexcept { return alive_count_ == 0; }

  // Throws ContractViolation if v is already deleted.
  void delete_vertex(Vertex v);

  void reset();

  std::span<const Vertex> alive_vertices() const;
  std::uint32_t local_index(Vertex v) const noexcept { return local_index_[v]; }

  template <typename Fn>
  void for_each_live_neighbor(Vertex v, Fn&& fn) const {
    for (Vertex w : base_->neighbors(v)) {
      if (alive_[w]) fn(w);
    }
  }

  bool adjacent(Vertex u, Vertex v) const noexcept { return base_->adjacent(u, v); }

 private:
  const Graph* base_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> live_degree_;
  std::size_t alive_count_ = 0;

  mutable std::vector<Vertex> alive_list_;
  mutable std::vector<std::uint32_t> local_index_;
  mutable bool list_dirty_ = false;
};

// |N̄(u)| inside the alive subgraph, in O(1).
std::size_t non_neighbor_count(const SubgraphView& view, Vertex u);

// {u} plus every alive non-neighbor of u, ascending. O(alive_count + deg(u)).
std::vector<Vertex> complement_closed_neighborhood(const SubgraphView& view, Vertex u);

bool is_independent(const SubgraphView& view, std::span<const Vertex> vertices);
bool is_clique(const SubgraphView& view, std::span<const Vertex> vertices);

// The alive subgraph materialized as a standalone Graph; original[i] is the
// base id of local vertex i.
struct InducedGraph {
  Graph graph;
  std::vector<Vertex> original;
};
InducedGraph induced_subgraph(const SubgraphView& view);

}  // namespace recol
