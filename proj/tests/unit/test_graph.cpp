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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "recol/errors.hpp"
#include "recol/graph.hpp"
#include "recol/subgraph_view.hpp"
#include "support/graphs.hpp"

using namespace recol;
using namespace recol::testing;

namespace {

std::vector<Vertex> to_vec(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("build_graph cleans raw edge lists") {
  SUBCASE("duplicates collapse") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}, {1, 0}});
    CHECK(g.num_edges() == 2);
    CHECK(to_vec(g.neighbors(1)) == std::vector<Vertex>{0, 2});
  }
  SUBCASE("self-loops dropped") {
    const Graph g = build_graph(2, {{0, 0}, {0, 1}});
    CHECK(g.num_edges() == 1);
    CHECK(to_vec(g.neighbors(0)) == std::vector<Vertex>{1});
  }
  SUBCASE("out-of-range endpoint names the pair") {
    try {
      build_graph(4, {{0, 5}});
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("(0, 5)") != std::string::npos);
    }
  }
}

TEST_CASE("build_graph invariants on random input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<Edge> edges;
    for (int i = 0; i < 120; ++i) {
      edges.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
    }
    const Graph g = build_graph(n, edges);
    std::size_t arcs = 0;
    for (Vertex u = 0; u < n; ++u) {
      const auto adj = g.neighbors(u);
      arcs += adj.size();
      CHECK(std::is_sorted(adj.begin(), adj.end()));
      CHECK(std::adjacent_find(adj.begin(), adj.end()) == adj.end());
      for (Vertex w : adj) {
        CHECK(w != u);
        CHECK(g.adjacent(w, u));
      }
    }
    CHECK(arcs == 2 * g.num_edges());

    // Any permutation of the input (including flipped pairs) gives the same adjacency.
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
      if (rng() % 2) std::swap(e.first, e.second);
    const Graph h = build_graph(n, edges);
    for (Vertex u = 0; u < n; ++u) CHECK(to_vec(g.neighbors(u)) == to_vec(h.neighbors(u)));
  }
}

TEST_CASE("complement_closed_neighborhood") {
  const Graph c4 = cycle_graph(4);
  const Graph k4 = complete_graph(4);
  const Graph p3 = path_graph(3);
  CHECK(complement_closed_neighborhood(SubgraphView(c4), 0) == std::vector<Vertex>{0, 2});
  CHECK(complement_closed_neighborhood(SubgraphView(k4), 2) == std::vector<Vertex>{2});
  CHECK(complement_closed_neighborhood(SubgraphView(p3), 1) == std::vector<Vertex>{1});

  SubgraphView view(c4);
  view.delete_vertex(1);
  CHECK_THROWS_AS(complement_closed_neighborhood(view, 1), ContractViolation);
}

TEST_CASE("non_neighbor_count") {
  const Graph k4 = complete_graph(4);
  const Graph c4 = cycle_graph(4);
  SubgraphView kv(k4);
  SubgraphView cv(c4);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(non_neighbor_count(kv, v) == 0);
    CHECK(non_neighbor_count(cv, v) == 1);
  }
  cv.delete_vertex(2);
  CHECK(non_neighbor_count(cv, 0) == 0);
  CHECK(non_neighbor_count(cv, 1) == 1);
}

TEST_CASE("delete_vertex maintains live degrees") {
  SUBCASE("P3 center") {
    const Graph g = path_graph(3);
    SubgraphView view(g);
    view.delete_vertex(1);
    CHECK(view.live_degree(0) == 0);
    CHECK(view.live_degree(2) == 0);
    CHECK(view.alive_count() == 2);
  }
  SUBCASE("K3") {
    const Graph g = complete_graph(3);
    SubgraphView view(g);
    view.delete_vertex(0);
    CHECK(view.live_degree(1) == 1);
    CHECK(view.live_degree(2) == 1);
  }
  SUBCASE("star center") {
    const Graph g = star_graph(3);
    SubgraphView view(g);
    view.delete_vertex(0);
    for (Vertex v = 1; v <= 3; ++v) CHECK(view.live_degree(v) == 0);
  }
  SUBCASE("double delete") {
    const Graph g = path_graph(3);
    SubgraphView view(g);
    view.delete_vertex(0);
    CHECK_THROWS_AS(view.delete_vertex(0), ContractViolation);
  }
}

TEST_CASE("view bookkeeping matches recomputation after random deletions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 63;
    const Graph g = random_graph(n, 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0, rng);
    SubgraphView view(g);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t deletions = rng() % n;
    for (std::size_t i = 0; i < deletions; ++i) {
      view.delete_vertex(order[i]);
      if (rng() % 3 == 0) (void)view.alive_vertices();  // interleave compaction
    }

    std::size_t alive = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!view.alive(u)) continue;
      ++alive;
      std::uint32_t degree = 0;
      for (Vertex w : g.neighbors(u)) degree += view.alive(w) ? 1 : 0;
      CHECK(view.live_degree(u) == degree);
      const auto closed = complement_closed_neighborhood(view, u);
      CHECK(closed.size() == non_neighbor_count(view, u) + 1);
      CHECK(std::find(closed.begin(), closed.end(), u) != closed.end());
    }
    CHECK(view.alive_count() == alive);
    const auto list = view.alive_vertices();
    CHECK(list.size() == alive);
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (std::uint32_t i = 0; i < list.size(); ++i) CHECK(view.local_index(list[i]) == i);
  }
}

TEST_CASE("reset restores the full graph") {
  const Graph g = petersen_graph();
  SubgraphView view(g);
  view.delete_vertex(3);
  view.delete_vertex(7);
  view.reset();
  CHECK(view.alive_count() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(view.live_degree(v) == 3);
  CHECK(view.alive_vertices().size() == 10);
}

TEST_CASE("is_independent and is_clique") {
  const Graph c4 = cycle_graph(4);
  const Graph k3 = complete_graph(3);
  const Graph p3 = path_graph(3);
  const std::vector<Vertex> opposite{0, 2};
  const std::vector<Vertex> all3{0, 1, 2};
  const std::vector<Vertex> edge{0, 1};
  const std::vector<Vertex> none;
  const std::vector<Vertex> single{1};
  CHECK(is_independent(SubgraphView(c4), opposite));
  CHECK(is_clique(SubgraphView(k3), all3));
  CHECK_FALSE(is_independent(SubgraphView(p3), edge));
  CHECK(is_independent(SubgraphView(p3), none));
  CHECK(is_clique(SubgraphView(p3), none));
  CHECK(is_clique(SubgraphView(p3), single));
}

TEST_CASE("induced_subgraph keeps only alive vertices") {
  const Graph g = cycle_graph(5);
  SubgraphView view(g);
  view.delete_vertex(0);
  const auto induced = induced_subgraph(view);
  CHECK(induced.original == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(induced.graph.num_edges() == 3);  // path 1-2-3-4
}
