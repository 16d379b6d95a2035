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
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace recol {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Immutable simple undirected graph in compressed sparse row form.
//
// Every adjacency list is sorted and free of duplicates and self-loops, and
// the structure is symmetric: v is in neighbors(u) iff u is in neighbors(v).
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  // Binary search in the shorter of the two lists.
  bool adjacent(Vertex u, Vertex v) const noexcept;

  // Offset of v's adjacency list inside the flat neighbor array.
  std::size_t offset(Vertex v) const noexcept { return offsets_[v]; }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

// Builds a simple graph on vertices [0, n). Self-loops are dropped and
// duplicate (including reversed) pairs collapse to one edge. Throws
// InputError naming the first pair with an endpoint >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace recol
