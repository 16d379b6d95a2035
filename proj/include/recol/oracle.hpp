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
#include <vector>

#include "recol/coloring.hpp"
#include "recol/graph.hpp"

// Exact reference routines for tiny graphs. They share no code with the
// solver so they can serve as independent test oracles.
namespace recol::oracle {

inline constexpr std::size_t kMaxOracleVertices = 16;

// True iff every vertex is colored and every edge is bichromatic.
bool verify_coloring(const Graph& g, const Coloring& coloring);

// Exact chromatic number. Throws InputError for n > 16.
std::size_t brute_force_chromatic(const Graph& g);

// An optimal coloring, colors in [0, χ). Throws InputError for n > 16.
Coloring brute_force_coloring(const Graph& g);

// Exact clique number. Throws InputError for n > 16.
std::size_t brute_force_max_clique(const Graph& g);

// A maximum clique, ascending.
std::vector<Vertex> brute_force_clique(const Graph& g);

}  // namespace recol::oracle
