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
#include <vector>

#include "recol/graph.hpp"

namespace recol {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

// Partial vertex coloring of a graph with n vertices.
//
// Tracks the size of every color class so the number of distinct colors in
// use is available in O(1). Colors need not be contiguous while a coloring is
// being built; normalize() relabels them to [0, num_colors()) in order of
// first appearance by vertex id.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : color_(n, kUncolored) {}

  std::size_t size() const noexcept { return color_.size(); }

  Color color_of(Vertex v) const noexcept { return color_[v]; }
  bool is_colored(Vertex v) const noexcept { return color_[v] != kUncolored; }

  // c >= 0 assigns, kUncolored clears.
  void assign(Vertex v, Color c);

  std::size_t num_colors() const noexcept { return distinct_; }
  std::size_t num_colored() const noexcept { return colored_; }

  // Smallest color id not used by any vertex; equals num_colors() once
  // normalized.
  Color next_free_color() const noexcept { return static_cast<Color>(class_size_.size()); }

  void normalize();

  // Color classes indexed by color id, members ascending. Requires a
  // normalized coloring to have no empty classes.
  std::vector<std::vector<Vertex>> classes() const;

  const std::vector<Color>& colors() const noexcept { return color_; }

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.color_ == b.color_; }

 private:
  std::vector<Color> color_;
  std::vector<std::uint32_t> class_size_;
  std::size_t distinct_ = 0;
  std::size_t colored_ = 0;
};

}  // namespace recol
