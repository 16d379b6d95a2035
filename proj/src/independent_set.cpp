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

#include "recol/independent_set.hpp"

#include <algorithm>
#include <functional>

#include "recol/errors.hpp"

namespace recol {

double skip_probability(std::size_t round) noexcept {
  return static_cast<double>(round % 25) / 100.0;
}

std::vector<Vertex> find_independent_set(const SubgraphView& view, std::size_t round, Rng& rng) {
  if (view.empty()) throw ContractViolation("find_independent_set: view has no alive vertices");
  const double p = skip_probability(round);
  const auto alive = view.alive_vertices();
  const std::size_t count = alive.size();

  std::vector<std::uint32_t> degree(count);
  std::uint32_t max_degree = 0;
  for (std::size_t i = 0; i < count; ++i) {
    degree[i] = view.live_degree(alive[i]);
    max_degree = std::max(max_degree, degree[i]);
  }
  // Min-heaps of local indices per candidate degree, with lazy deletion.
  std::vector<std::vector<std::uint32_t>> buckets(max_degree + 1);
  for (std::uint32_t i = 0; i < count; ++i) buckets[degree[i]].push_back(i);

  std::vector<std::uint8_t> candidate(count, 1);
  std::size_t remaining = count;
  std::size_t top = max_degree;

  auto leave = [&](std::uint32_t i) {
    candidate[i] = 0;
    --remaining;
    view.for_each_live_neighbor(alive[i], [&](Vertex w) {
      const std::uint32_t j = view.local_index(w);
      if (!candidate[j]) return;
      const std::uint32_t d = --degree[j];
      buckets[d].push_back(j);
      std::push_heap(buckets[d].begin(), buckets[d].end(), std::greater<>{});
    });
  };

  std::vector<Vertex> chosen;
  Vertex first_pick = kNoVertex;
  while (remaining > 0) {
    while (buckets[top].empty()) --top;
    auto& bucket = buckets[top];
    std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
    const std::uint32_t i = bucket.back();
    bucket.pop_back();
    if (!candidate[i] || degree[i] != top) continue;

    if (first_pick == kNoVertex) first_pick = alive[i];
    leave(i);
    if (uniform_unit(rng) > p) {
      chosen.push_back(alive[i]);
      view.for_each_live_neighbor(alive[i], [&](Vertex w) {
        const std::uint32_t j = view.local_index(w);
        if (candidate[j]) leave(j);
      });
    }
  }
  if (chosen.empty()) chosen.push_back(first_pick);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace recol
