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

#include "recol/random.hpp"
#include "recol/subgraph_view.hpp"

namespace recol {

// Skip probability used in a given round: (round mod 25) / 100.
double skip_probability(std::size_t round) noexcept;

// Greedy independent set with random skips.
//
// Repeatedly takes the candidate with the most neighbors still in the
// candidate set (ties to the smaller id) and removes it from the candidates.
// With probability 1 - p the vertex joins the set and its neighbors leave the
// candidate set; otherwise it is skipped for good. If every vertex was
// skipped, the first (maximum-degree) pick is returned alone so the result is
// never empty. Throws ContractViolation on an empty view.
std::vector<Vertex> find_independent_set(const SubgraphView& view, std::size_t round, Rng& rng);

}  // namespace recol
