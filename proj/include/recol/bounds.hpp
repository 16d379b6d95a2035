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
#include <optional>
#include <vector>

#include "recol/coloring.hpp"
#include "recol/deadline.hpp"
#include "recol/random.hpp"
#include "recol/subgraph_view.hpp"

namespace recol {

// Round bookkeeping of the anytime loop. lb and ub include used_colors.
struct BoundState {
  std::size_t lb = 0;
  std::size_t ub = 0;
  std::size_t used_colors = 0;
};

struct CliqueSearchParams {
  // Fraction of alive vertices used as clique seeds.
  double seed_fraction = 0.01;
  // Candidates inspected per growth step.
  std::size_t sample_size = 64;
};

struct CliqueBound {
  std::size_t lb = 0;
  std::vector<Vertex> witness;  // empty when no clique beat the incoming lb
};

// Randomized greedy clique growth from max(1, ⌊seed_fraction·alive⌋) seeds.
//
// Each step draws up to sample_size candidates (with replacement once the
// candidate set is larger than sample_size) and keeps the one with the most
// neighbors inside the candidate set, ties to the smaller id. A seed is
// abandoned as soon as |clique| + |candidates| + used_colors <= lb.
CliqueBound find_clique(const SubgraphView& view, std::size_t lb, std::size_t used_colors,
                        const CliqueSearchParams& params, Rng& rng, const Deadline& deadline = {});

struct UpperBound {
  std::size_t ub = 0;
  // Present only when the colorer finished below the incoming ub. Covers
  // exactly the alive vertices, colors in [0, ub - used_colors).
  std::optional<Coloring> coloring;
};

// Smallest-last greedy coloring: repeatedly colors the uncolored vertex with
// the fewest uncolored neighbors (ties to the smaller id) with the smallest
// free color. Returns {ub, nullopt} as soon as used_colors + colors >= ub.
UpperBound degeneracy_color(const SubgraphView& view, std::size_t ub, std::size_t used_colors,
                            const Deadline& deadline = {});

// DSatur with randomized color choice: picks the uncolored vertex of maximum
// saturation (ties: larger live degree, then smaller id) and gives it a
// uniformly random feasible color among those already open, opening a new
// one only when none fits. Same early exit as degeneracy_color.
UpperBound dsatur_color(const SubgraphView& view, std::size_t ub, std::size_t used_colors, Rng& rng,
                        const Deadline& deadline = {});

}  // namespace recol
