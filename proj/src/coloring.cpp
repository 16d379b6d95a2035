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

#include "recol/coloring.hpp"

namespace recol {

void Coloring::assign(Vertex v, Color c) {
  const Color old = color_[v];
  if (old == c) return;
  if (old != kUncolored) {
    if (--class_size_[static_cast<std::size_t>(old)] == 0) --distinct_;
    --colored_;
  }
  color_[v] = c;
  if (c != kUncolored) {
    const auto idx = static_cast<std::size_t>(c);
    if (idx >= class_size_.size()) class_size_.resize(idx + 1, 0);
    if (class_size_[idx]++ == 0) ++distinct_;
    ++colored_;
  }
}

void Coloring::normalize() {
  std::vector<Color> relabel(class_size_.size(), kUncolored);
  Color next = 0;
  for (Color& c : color_) {
    if (c == kUncolored) continue;
    auto& r = relabel[static_cast<std::size_t>(c)];
    if (r == kUncolored) r = next++;
    c = r;
  }
  class_size_.assign(static_cast<std::size_t>(next), 0);
  for (Color c : color_) {
    if (c != kUncolored) ++class_size_[static_cast<std::size_t>(c)];
  }
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(class_size_.size());
  for (Vertex v = 0; v < color_.size(); ++v) {
    if (color_[v] != kUncolored) out[static_cast<std::size_t>(color_[v])].push_back(v);
  }
  return out;
}

}  // namespace recol
