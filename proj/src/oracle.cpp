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

#include "recol/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "recol/errors.hpp"

namespace recol::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > kMaxOracleVertices) {
    throw InputError("oracle refuses graphs with more than " +
                     std::to_string(kMaxOracleVertices) + " vertices (got " +
                     std::to_string(g.num_vertices()) + ")");
  }
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w : g.neighbors(u)) adj[u] |= Mask{1} << w;
  }
  return adj;
}

void grow_clique(const std::vector<Mask>& adj, Mask current, Mask candidates, Mask& best) {
  if (candidates == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  grow_clique(adj, current | bit, candidates & adj[static_cast<std::size_t>(v)], best);
  grow_clique(adj, current, candidates & ~bit, best);
}

Mask max_clique_mask(const std::vector<Mask>& adj) {
  const auto n = adj.size();
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask best = 0;
  grow_clique(adj, 0, all, best);
  return best;
}

// Backtracking k-coloring of order[pos..]; earlier vertices are colored.
bool extend(const std::vector<Mask>& adj, const std::vector<Vertex>& order, std::size_t pos,
            std::size_t k, int highest, std::vector<int>& color) {
  if (pos == order.size()) return true;
  const Vertex v = order[pos];
  // Symmetry breaking: a vertex may open at most one new color.
  const int limit = std::min<int>(static_cast<int>(k) - 1, highest + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (Mask m = adj[v]; m != 0; m &= m - 1) {
      if (color[static_cast<std::size_t>(std::countr_zero(m))] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (extend(adj, order, pos + 1, k, std::max(highest, c), color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

bool verify_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.num_vertices()) return false;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!coloring.is_colored(u)) return false;
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && coloring.color_of(u) == coloring.color_of(w)) return false;
    }
  }
  return true;
}

Coloring brute_force_coloring(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  Coloring result(n);
  if (n == 0) return result;

  // Seed with a maximum clique: its vertices take colors 0..ω-1 up front and
  // ω is the first k worth trying.
  const Mask clique = max_clique_mask(adj);
  std::vector<Vertex> order;
  for (Mask m = clique; m != 0; m &= m - 1) order.push_back(static_cast<Vertex>(std::countr_zero(m)));
  const std::size_t omega = order.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!(clique >> v & 1)) order.push_back(v);
  }

  for (std::size_t k = std::max<std::size_t>(omega, 1);; ++k) {
    std::vector<int> color(n, -1);
    for (std::size_t i = 0; i < omega; ++i) color[order[i]] = static_cast<int>(i);
    if (extend(adj, order, omega, k, static_cast<int>(omega) - 1, color)) {
      for (Vertex v = 0; v < n; ++v) result.assign(v, color[v]);
      return result;
    }
  }
}

std::size_t brute_force_chromatic(const Graph& g) { return brute_force_coloring(g).num_colors(); }

std::vector<Vertex> brute_force_clique(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::vector<Vertex> out;
  for (Mask m = max_clique_mask(adj); m != 0; m &= m - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  }
  return out;
}

std::size_t brute_force_max_clique(const Graph& g) { return brute_force_clique(g).size(); }

}  // namespace recol::oracle
