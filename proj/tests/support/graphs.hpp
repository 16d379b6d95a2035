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

// Graph families and independent helpers shared by the unit and acceptance
// suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "recol/graph.hpp"

namespace recol::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return build_graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return build_graph(a + b, edges);
}

// Star with center 0.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, edges);
}

inline Graph edgeless_graph(std::size_t n) { return build_graph(n, std::span<const Edge>{}); }

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return build_graph(10, edges);
}

// Mycielski construction: χ(M(G)) = χ(G) + 1, triangle-free preserved.
inline Graph mycielski(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w) edges.emplace_back(u, w);
      edges.emplace_back(static_cast<Vertex>(n + u), w);
    }
    edges.emplace_back(static_cast<Vertex>(n + u), static_cast<Vertex>(2 * n));
  }
  return build_graph(2 * n + 1, edges);
}

// k = 1: K2, 2: C5, 3: Grötzsch graph (11 vertices, χ = 4),
// 4: 23 vertices, χ = 5. All triangle-free past k = 1.
inline Graph mycielski_graph(int k) {
  Graph g = build_graph(2, {{0, 1}});  // M1 = K2, χ = 2
  for (int i = 1; i < k; ++i) g = mycielski(g);
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)), v);
  }
  return build_graph(n, edges);
}

inline std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex w : g.neighbors(u))
      if (u < w) edges.emplace_back(u, w);
  return edges;
}

// Adds `twins` new vertices, each copying the neighborhood of a random
// existing vertex, so equal-neighborhood pairs are guaranteed.
inline Graph inject_twins(const Graph& g, std::size_t twins, std::mt19937_64& rng) {
  std::vector<Edge> edges = edge_list(g);
  const std::size_t n = g.num_vertices();
  for (std::size_t t = 0; t < twins; ++t) {
    const auto original = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const auto twin = static_cast<Vertex>(n + t);
    for (Vertex w : g.neighbors(original)) edges.emplace_back(twin, w);
  }
  return build_graph(n + twins, edges);
}

// Degeneracy by naive repeated minimum-degree peeling, O(n²).
inline std::size_t degeneracy_by_peeling(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t result = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best == kNoVertex || degree[v] < degree[best])) best = v;
    result = std::max(result, degree[best]);
    removed[best] = true;
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --degree[w];
  }
  return result;
}

}  // namespace recol::testing
