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

#include "recol/graph.hpp"

#include <algorithm>
#include <string>

#include "recol/errors.hpp"

namespace recol {

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
  }

  // Counting sort of both arc directions into per-vertex buckets.
  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];

  std::vector<Vertex> arcs(counts[n]);
  {
    std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
    for (const auto& [u, v] : edges) {
      if (u == v) continue;
      arcs[cursor[u]++] = v;
      arcs[cursor[v]++] = u;
    }
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(arcs.size());
  for (std::size_t u = 0; u < n; ++u) {
    auto first = arcs.begin() + static_cast<std::ptrdiff_t>(counts[u]);
    auto last = arcs.begin() + static_cast<std::ptrdiff_t>(counts[u + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.neighbors_.insert(g.neighbors_.end(), first, last);
    g.offsets_[u + 1] = g.neighbors_.size();
  }
  g.neighbors_.shrink_to_fit();
  return g;
}

}  // namespace recol
