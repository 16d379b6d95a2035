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

#include <limits>
#include <random>

#include "doctest.h"
#include "recol/bounds.hpp"
#include "recol/oracle.hpp"
#include "support/graphs.hpp"

using namespace recol;
using namespace recol::testing;

namespace {

constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();

bool proper_on_alive(const SubgraphView& view, const Coloring& c) {
  for (Vertex v : view.alive_vertices()) {
    if (!c.is_colored(v)) return false;
    bool clash = false;
    view.for_each_live_neighbor(v, [&](Vertex w) { clash = clash || c.color_of(w) == c.color_of(v); });
    if (clash) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("find_clique examples") {
  Rng rng(1);
  SUBCASE("K3") {
    const Graph g = complete_graph(3);
    const SubgraphView view(g);
    const auto r = find_clique(view, 0, 0, {}, rng);
    CHECK(r.lb == 3);
    auto w = r.witness;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("C5") {
    const Graph g = cycle_graph(5);
    const SubgraphView view(g);
    CHECK(find_clique(view, 0, 0, {}, rng).lb == 2);
    CHECK(oracle::brute_force_max_clique(g) == 2);
  }
  SUBCASE("guard keeps a higher incoming bound") {
    const Graph g = complete_graph(3);
    const SubgraphView view(g);
    const auto r = find_clique(view, 5, 0, {}, rng);
    CHECK(r.lb == 5);
    CHECK(r.witness.empty());
  }
  SUBCASE("empty view") {
    const Graph g = path_graph(2);
    SubgraphView view(g);
    view.delete_vertex(0);
    view.delete_vertex(1);
    const auto r = find_clique(view, 1, 3, {}, rng);
    CHECK(r.lb == 3);
    CHECK(r.witness.empty());
  }
  SUBCASE("used colors offset the result") {
    const Graph g = complete_graph(4);
    const SubgraphView view(g);
    CHECK(find_clique(view, 0, 2, {}, rng).lb == 6);
  }
}

TEST_CASE("find_clique properties") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(2 + gen() % 15, 0.2 + 0.7 * static_cast<double>(gen() % 10) / 10.0, gen);
    const SubgraphView view(g);
    Rng rng(gen());
    const std::size_t lb = gen() % 3;
    const std::size_t used = gen() % 3;
    const CliqueSearchParams params{1.0, 1 + gen() % 8};
    const auto r = find_clique(view, lb, used, params, rng);
    CHECK(r.lb >= lb);
    CHECK(is_clique(view, r.witness));
    CHECK(r.witness.size() <= oracle::brute_force_max_clique(g));
    if (!r.witness.empty()) CHECK(r.witness.size() + used == r.lb);
    if (lb == 0) CHECK(r.lb - used <= oracle::brute_force_max_clique(g));
  }
}

TEST_CASE("degeneracy_color examples") {
  std::mt19937_64 gen(3);
  SUBCASE("trees need two colors") {
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_tree(2 + gen() % 40, gen);
      const SubgraphView view(g);
      const auto r = degeneracy_color(view, kNoBound, 0);
      CHECK(r.ub == 2);
      REQUIRE(r.coloring);
      CHECK(oracle::verify_coloring(g, *r.coloring));
    }
  }
  SUBCASE("C5 takes three") {
    const Graph g = cycle_graph(5);
    const SubgraphView view(g);
    const auto r = degeneracy_color(view, kNoBound, 0);
    CHECK(r.ub == 3);
    CHECK(r.ub == oracle::brute_force_chromatic(g));
  }
  SUBCASE("early exit when the bound is reached") {
    const Graph g = cycle_graph(5);
    const SubgraphView view(g);
    const auto r = degeneracy_color(view, 3, 1);
    CHECK(r.ub == 3);
    CHECK_FALSE(r.coloring);
  }
  SUBCASE("used colors already at the bound") {
    const Graph g = path_graph(3);
    const SubgraphView view(g);
    CHECK_FALSE(degeneracy_color(view, 2, 2).coloring);
  }
}

TEST_CASE("dsatur_color examples") {
  SUBCASE("K3,3 is bipartite") {
    const Graph g = complete_bipartite(3, 3);
    const SubgraphView view(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      CHECK(dsatur_color(view, kNoBound, 0, rng).ub == 2);
    }
  }
  SUBCASE("C5 takes three") {
    const Graph g = cycle_graph(5);
    const SubgraphView view(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      CHECK(dsatur_color(view, kNoBound, 0, rng).ub == 3);
    }
  }
  SUBCASE("K4 on top of two used colors") {
    const Graph g = complete_graph(4);
    const SubgraphView view(g);
    Rng rng(0);
    const auto r = dsatur_color(view, 7, 2, rng);
    CHECK(r.ub == 6);
    REQUIRE(r.coloring);
    Rng again(0);
    CHECK(dsatur_color(view, 6, 2, again).ub == 6);
    Rng third(0);
    CHECK_FALSE(dsatur_color(view, 6, 2, third).coloring);
  }
}

TEST_CASE("colorers are proper and sound on random graphs") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(1 + gen() % 12, 0.1 + 0.8 * static_cast<double>(gen() % 10) / 10.0, gen);
    SubgraphView view(g);
    // Knock out a few vertices so colorers see a proper subgraph.
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (view.alive_count() > 1 && gen() % 5 == 0) view.delete_vertex(v);
    }
    const auto induced = induced_subgraph(view);
    const std::size_t chi = oracle::brute_force_chromatic(induced.graph);
    const std::size_t used = gen() % 3;

    const auto deg = degeneracy_color(view, kNoBound, used);
    REQUIRE(deg.coloring);
    CHECK(proper_on_alive(view, *deg.coloring));
    CHECK(deg.ub == used + deg.coloring->num_colors());
    CHECK(deg.ub - used >= chi);
    CHECK(deg.ub - used <= degeneracy_by_peeling(induced.graph) + 1);

    Rng rng(gen());
    const auto ds = dsatur_color(view, kNoBound, used, rng);
    REQUIRE(ds.coloring);
    CHECK(proper_on_alive(view, *ds.coloring));
    CHECK(ds.ub == used + ds.coloring->num_colors());
    CHECK(ds.ub - used >= chi);
  }
}

TEST_CASE("dsatur_color is deterministic per seed") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(30 + gen() % 50, 0.3, gen);
    const SubgraphView view(g);
    const std::uint64_t seed = gen();
    Rng a(seed);
    Rng b(seed);
    const auto ra = dsatur_color(view, kNoBound, 0, a);
    const auto rb = dsatur_color(view, kNoBound, 0, b);
    REQUIRE(ra.coloring);
    REQUIRE(rb.coloring);
    CHECK(*ra.coloring == *rb.coloring);
  }
}
