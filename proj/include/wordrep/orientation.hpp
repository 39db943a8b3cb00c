// Copyright 2026 The wordrep Authors
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

#ifndef WORDREP_ORIENTATION_HPP_
#define WORDREP_ORIENTATION_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

using Arc = std::pair<int, int>;

// An assignment of a direction to every edge of a base graph.
class Orientation {
 public:
  // Every edge of `base` must appear exactly once, in one direction, and no
  // other arc may appear.
  Orientation(const Graph& base, std::span<const Arc> arcs);

  // Orients i -> j whenever rank[i] < rank[j].
  static Orientation from_ranking(const Graph& base, std::span<const int> rank);

  const Graph& base() const { return base_; }
  int order() const { return base_.order(); }
  bool has_arc(int u, int v) const { return (out_[u] & bit(v)) != 0; }
  VertexMask out(int v) const { return out_[v]; }
  VertexMask in(int v) const;

  // Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  Orientation reversed() const;

  friend bool operator==(const Orientation& a, const Orientation& b);

 private:
  Orientation() = default;

  Graph base_;
  std::array<VertexMask, kMaxVertices> out_{};
};

// Path v1 -> ... -> vk with the arc v1 -> vk present and the arc between
// missing.first and missing.second (earlier -> later on the path) absent.
struct ShortcutWitness {
  std::vector<int> path;
  std::pair<int, int> missing;
};

bool is_acyclic(const Orientation& o);

// Strict descendants of every vertex; meaningful for acyclic orientations.
std::vector<VertexMask> transitive_closure(const Orientation& o);

// length = number of arcs on the defining path (>= 3); nullopt means any
// length. Throws on cyclic input.
std::optional<ShortcutWitness> find_shortcut(
    const Orientation& o, std::optional<int> length = std::nullopt);

// Checks a witness against the orientation it claims to come from.
bool is_valid_shortcut(const Orientation& o, const ShortcutWitness& w);

bool is_semi_transitive_orientation(const Orientation& o);

// Acyclic and free of shortcuts whose path has exactly `length` arcs.
bool is_shortcut_free(const Orientation& o, int length);

bool is_transitive_orientation(const Orientation& o);

// "1->2,1->3,..." in (tail, head) order, labels 1..n.
std::string format_arcs(const Orientation& o);
Orientation parse_arcs(const Graph& base, std::string_view text);

}  // namespace wordrep

#endif  // WORDREP_ORIENTATION_HPP_
