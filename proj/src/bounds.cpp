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

#include "recol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <unordered_set>

namespace recol {
namespace {

constexpr std::size_t kPollStride = 1024;

// |a ∩ b| for sorted ranges; probes the longer range from the shorter one.
std::size_t count_common(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::size_t count = 0;
  if (a.size() * 8 < b.size()) {
    for (Vertex v : a) count += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
    return count;
  }
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

void keep_common(std::vector<Vertex>& candidates, std::span<const Vertex> adj) {
  std::erase_if(candidates,
                [&](Vertex v) { return !std::binary_search(adj.begin(), adj.end(), v); });
}

// Floyd's sampling of k distinct indices from [0, population).
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t k, Rng& rng) {
  std::vector<std::size_t> picked;
  picked.reserve(k);
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(k * 2);
  for (std::size_t j = population - k; j < population; ++j) {
    const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
    const std::size_t pick = chosen.contains(t) ? j : t;
    chosen.insert(pick);
    picked.push_back(pick);
  }
  return picked;
}

Coloring to_base_coloring(const SubgraphView& view, std::span<const Vertex> alive,
                          const std::vector<Color>& local_color) {
  Coloring coloring(view.base().num_vertices());
  for (std::size_t i = 0; i < alive.size(); ++i) coloring.assign(alive[i], local_color[i]);
  return coloring;
}

}  // namespace

CliqueBound find_clique(const SubgraphView& view, std::size_t lb, std::size_t used_colors,
                        const CliqueSearchParams& params, Rng& rng, const Deadline& deadline) {
  CliqueBound result{std::max(lb, used_colors), {}};
  if (view.empty()) return result;
  lb = result.lb;

  const auto alive = view.alive_vertices();
  const auto scaled = static_cast<std::size_t>(
      std::floor(params.seed_fraction * static_cast<double>(alive.size())));
  const std::size_t seeds = std::clamp<std::size_t>(scaled, 1, alive.size());
  const std::size_t sample_size = std::max<std::size_t>(params.sample_size, 1);

  std::vector<Vertex> clique;
  std::vector<Vertex> candidates;
  std::size_t processed = 0;
  for (std::size_t index : sample_indices(alive.size(), seeds, rng)) {
    if (++processed % kPollStride == 0 && deadline.expired()) break;
    const Vertex seed = alive[index];
    clique.assign(1, seed);
    candidates.clear();
    view.for_each_live_neighbor(seed, [&](Vertex w) { candidates.push_back(w); });

    while (!candidates.empty() && clique.size() + candidates.size() + used_colors > lb) {
      Vertex best = kNoVertex;
      std::size_t best_score = 0;
      auto consider = [&](Vertex w) {
        const std::size_t score = count_common(view.base().neighbors(w), candidates);
        if (best == kNoVertex || score > best_score || (score == best_score && w < best)) {
          best = w;
          best_score = score;
        }
      };
      if (candidates.size() <= sample_size) {
        for (Vertex w : candidates) consider(w);
      } else {
        for (std::size_t s = 0; s < sample_size; ++s) {
          consider(candidates[uniform_below(rng, candidates.size())]);
        }
      }
      clique.push_back(best);
      keep_common(candidates, view.base().neighbors(best));
    }

    if (clique.size() + used_colors > lb) {
      lb = clique.size() + used_colors;
      result.lb = lb;
      result.witness = clique;
    }
  }
  return result;
}

UpperBound degeneracy_color(const SubgraphView& view, std::size_t ub, std::size_t used_colors,
                            const Deadline& deadline) {
  if (used_colors >= ub) return {ub, std::nullopt};
  const auto alive = view.alive_vertices();
  const std::size_t count = alive.size();

  std::vector<std::uint32_t> remaining_degree(count);
  std::uint32_t max_degree = 0;
  for (std::size_t i = 0; i < count; ++i) {
    remaining_degree[i] = view.live_degree(alive[i]);
    max_degree = std::max(max_degree, remaining_degree[i]);
  }
  // One min-heap of local indices per degree; entries go stale when the
  // vertex is peeled or its degree drops, and are skipped on pop.
  std::vector<std::vector<std::uint32_t>> buckets(max_degree + 1);
  for (std::uint32_t i = 0; i < count; ++i) buckets[remaining_degree[i]].push_back(i);
  // Pushed in ascending order, so each bucket already satisfies the heap property.

  // Peel vertices by fewest remaining neighbors, then color in reverse peel
  // order so each vertex sees at most degeneracy colored neighbors.
  std::vector<std::uint8_t> peeled(count, 0);
  std::vector<std::uint32_t> order;
  order.reserve(count);
  std::uint32_t lowest = 0;
  while (order.size() < count) {
    while (buckets[lowest].empty()) ++lowest;
    auto& bucket = buckets[lowest];
    std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
    const std::uint32_t i = bucket.back();
    bucket.pop_back();
    if (peeled[i] || remaining_degree[i] != lowest) continue;
    peeled[i] = 1;
    order.push_back(i);
    view.for_each_live_neighbor(alive[i], [&](Vertex w) {
      const std::uint32_t j = view.local_index(w);
      if (peeled[j]) return;
      const std::uint32_t d = --remaining_degree[j];
      buckets[d].push_back(j);
      std::push_heap(buckets[d].begin(), buckets[d].end(), std::greater<>{});
      lowest = std::min(lowest, d);
    });
    if (order.size() % kPollStride == 0 && deadline.expired()) return {ub, std::nullopt};
  }

  std::vector<Color> color(count, kUncolored);
  std::vector<std::uint32_t> seen;
  std::uint32_t stamp = 0;
  std::size_t colors_used = 0;
  std::size_t done = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t i = *it;
    ++stamp;
    seen.resize(colors_used + 1, 0);
    view.for_each_live_neighbor(alive[i], [&](Vertex w) {
      const Color c = color[view.local_index(w)];
      if (c != kUncolored) seen[static_cast<std::size_t>(c)] = stamp;
    });
    Color c = 0;
    while (seen[static_cast<std::size_t>(c)] == stamp) ++c;
    color[i] = c;
    if (static_cast<std::size_t>(c) == colors_used) {
      ++colors_used;
      if (used_colors + colors_used >= ub) return {ub, std::nullopt};
    }
    if (++done % kPollStride == 0 && deadline.expired()) return {ub, std::nullopt};
  }
  return {used_colors + colors_used, to_base_coloring(view, alive, color)};
}

UpperBound dsatur_color(const SubgraphView& view, std::size_t ub, std::size_t used_colors, Rng& rng,
                        const Deadline& deadline) {
  if (used_colors >= ub) return {ub, std::nullopt};
  const auto alive = view.alive_vertices();
  const std::size_t count = alive.size();

  // Per-vertex sorted set of distinct neighbor colors, stored in a flat
  // array with one slot per live incident edge.
  std::vector<std::size_t> offset(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) offset[i + 1] = offset[i] + view.live_degree(alive[i]);
  std::vector<Color> neighbor_colors(offset[count]);
  std::vector<std::uint32_t> saturation(count, 0);

  struct Key {
    std::uint32_t saturation;
    std::uint32_t degree;
    std::uint32_t index;
    bool operator<(const Key& o) const {
      if (saturation != o.saturation) return saturation < o.saturation;
      if (degree != o.degree) return degree < o.degree;
      return index > o.index;
    }
  };
  std::vector<Key> initial;
  initial.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) initial.push_back({0, view.live_degree(alive[i]), i});
  std::priority_queue<Key> queue(std::less<Key>{}, std::move(initial));

  std::vector<Color> color(count, kUncolored);
  std::size_t colors_used = 0;

  for (std::size_t done = 0; done < count;) {
    const Key top = queue.top();
    queue.pop();
    const std::uint32_t i = top.index;
    if (color[i] != kUncolored || top.saturation != saturation[i]) continue;

    const auto first = neighbor_colors.begin() + static_cast<std::ptrdiff_t>(offset[i]);
    const auto last = first + saturation[i];
    const std::size_t feasible = colors_used - saturation[i];
    Color c;
    if (feasible == 0) {
      c = static_cast<Color>(colors_used);
    } else {
      // r-th open color not present among the neighbors.
      c = static_cast<Color>(uniform_below(rng, feasible));
      for (auto it = first; it != last && *it <= c; ++it) ++c;
    }
    color[i] = c;
    if (static_cast<std::size_t>(c) == colors_used) {
      ++colors_used;
      if (used_colors + colors_used >= ub) return {ub, std::nullopt};
    }

    view.for_each_live_neighbor(alive[i], [&](Vertex w) {
      const std::uint32_t j = view.local_index(w);
      if (color[j] != kUncolored) return;
      const auto jfirst = neighbor_colors.begin() + static_cast<std::ptrdiff_t>(offset[j]);
      const auto jlast = jfirst + saturation[j];
      const auto pos = std::lower_bound(jfirst, jlast, c);
      if (pos != jlast && *pos == c) return;
      std::copy_backward(pos, jlast, jlast + 1);
      *pos = c;
      ++saturation[j];
      queue.push({saturation[j], view.live_degree(w), j});
    });

    if (++done % kPollStride == 0 && deadline.expired()) return {ub, std::nullopt};
  }
  return {used_colors + colors_used, to_base_coloring(view, alive, color)};
}

}  // namespace recol
