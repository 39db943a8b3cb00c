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

#include "wordrep/orientation_search.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

// Edges of one component, each appended when its later endpoint joins a
// vertex order that starts at the densest vertex and then always takes the
// vertex with the most links into the order so far.
std::vector<Arc> dense_first_edges(const Graph& g, VertexMask component) {
  std::vector<int> order;
  VertexMask placed = 0;
  while (placed != component) {
    int best = -1;
    int best_links = -1;
    for_each_bit(component & ~placed, [&](int v) {
      const int links = popcount(g.neighbors(v) & placed);
      if (best < 0 || links > best_links ||
          (links == best_links && g.degree(v) > g.degree(best))) {
        best = v;
        best_links = links;
      }
    });
    order.push_back(best);
    placed |= bit(best);
  }
  std::vector<Arc> edges;
  for (std::size_t t = 1; t < order.size(); ++t) {
    const int v = order[t];
    for (std::size_t s = 0; s < t; ++s) {
      const int u = order[s];
      if (g.has_edge(u, v)) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return edges;
}

class ComponentSearch {
 public:
  ComponentSearch(const Graph& g, VertexMask component, OrientationMode mode,
                  int length)
      : g_(g),
        n_(g.order()),
        mode_(mode),
        length_(length),
        edges_(dense_first_edges(g, component)),
        levels_((edges_.size() + 1) * 4 * static_cast<std::size_t>(n_), 0) {}

  bool run() { return descend(0); }

  std::uint64_t nodes() const { return nodes_; }

  // Arcs of the orientation found by the last successful run().
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    const VertexMask* s = level(edges_.size());
    for (int u = 0; u < n_; ++u) {
      for_each_bit(s[u], [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

 private:
  // Level layout: out rows, in rows, strict descendants, strict ancestors.
  VertexMask* level(std::size_t depth) {
    return levels_.data() + depth * 4 * static_cast<std::size_t>(n_);
  }
  const VertexMask* level(std::size_t depth) const {
    return levels_.data() + depth * 4 * static_cast<std::size_t>(n_);
  }

  bool descend(std::size_t depth) {
    if (depth == edges_.size()) return true;
    const auto [i, j] = edges_[depth];
    if (try_arc(depth, i, j)) return true;
    if (depth == 0) return false;
    return try_arc(depth, j, i);
  }

  bool try_arc(std::size_t depth, int a, int b) {
    ++nodes_;
    const VertexMask* cur = level(depth);
    if (cur[2 * n_ + b] & bit(a)) return false;  // b already reaches a
    VertexMask* next = level(depth + 1);
    std::copy(cur, cur + 4 * n_, next);
    VertexMask* out = next;
    VertexMask* in = next + n_;
    VertexMask* desc = next + 2 * n_;
    VertexMask* anc = next + 3 * n_;
    out[a] |= bit(b);
    in[b] |= bit(a);
    const VertexMask up = anc[a] | bit(a);
    const VertexMask down = desc[b] | bit(b);
    for_each_bit(up, [&](int x) { desc[x] |= down; });
    for_each_bit(down, [&](int y) { anc[y] |= up; });
    if (violates(next, a, b, up, down)) return false;
    return descend(depth + 1);
  }

  bool violates(const VertexMask* s, int a, int b, VertexMask up,
                VertexMask down) const {
    switch (mode_) {
      case OrientationMode::kTransitive:
        return transitive_violation(s, up, down);
      case OrientationMode::kSemiTransitive:
        return shortcut_violation(s, up, down);
      case OrientationMode::kShortcutFree:
        return fixed_length_violation(s, a, b);
    }
    return false;
  }

  // New reachable pairs run from `up` into `down`; each must be an edge.
  bool transitive_violation(const VertexMask* s, VertexMask up,
                            VertexMask down) const {
    const VertexMask* desc = s + 2 * n_;
    for (VertexMask xs = up; xs != 0; xs &= xs - 1) {
      const int x = lowest(xs);
      if (desc[x] & down & ~g_.neighbors(x)) return true;
    }
    return false;
  }

  // Any new violation uses a chord u -> v with u in `up` and v in `down`.
  bool shortcut_violation(const VertexMask* s, VertexMask up,
                          VertexMask down) const {
    const VertexMask* out = s;
    const VertexMask* desc = s + 2 * n_;
    const VertexMask* anc = s + 3 * n_;
    for (VertexMask us = up; us != 0; us &= us - 1) {
      const int u = lowest(us);
      for (VertexMask vs = out[u] & down; vs != 0; vs &= vs - 1) {
        const int v = lowest(vs);
        const VertexMask span = (desc[u] & anc[v]) | bit(u) | bit(v);
        for (VertexMask xs = span; xs != 0; xs &= xs - 1) {
          const int x = lowest(xs);
          if (desc[x] & span & ~g_.neighbors(x)) return true;
        }
      }
    }
    return false;
  }

  bool fully_adjacent(const int* path, int count) const {
    VertexMask later = 0;
    for (int p = count - 1; p >= 0; --p) {
      if (later & ~g_.neighbors(path[p])) return false;
      later |= bit(path[p]);
    }
    return true;
  }

  // Paths with exactly length_ arcs that use a -> b either as a path arc or
  // as the chord.
  bool fixed_length_violation(const VertexMask* s, int a, int b) const {
    const VertexMask* out = s;
    const VertexMask* in = s + n_;
    std::array<int, kMaxVertices + 1> path{};
    const int arcs = length_;

    // a -> b as the chord: paths a ~> b of `arcs` arcs.
    {
      const VertexMask* desc = s + 2 * n_;
      const VertexMask* anc = s + 3 * n_;
      const VertexMask inside = desc[a] & anc[b];
      path[0] = a;
      auto walk = [&](auto&& self, int depth) -> bool {
        const int tail = path[depth];
        if (depth == arcs) {
          return tail == b && !fully_adjacent(path.data(), arcs + 1);
        }
        const VertexMask allowed =
            depth + 1 == arcs ? (out[tail] & bit(b)) : (out[tail] & inside);
        for (VertexMask vs = allowed; vs != 0; vs &= vs - 1) {
          path[depth + 1] = lowest(vs);
          if (self(self, depth + 1)) return true;
        }
        return false;
      };
      if (walk(walk, 0)) return true;
    }

    // a -> b as the arc after `before` leading arcs.
    for (int before = 0; before < arcs; ++before) {
      path[before] = a;
      path[before + 1] = b;
      auto forward = [&](auto&& self, int pos) -> bool {
        if (pos == arcs) {
          return (out[path[0]] & bit(path[arcs])) &&
                 !fully_adjacent(path.data(), arcs + 1);
        }
        for (VertexMask vs = out[path[pos]]; vs != 0; vs &= vs - 1) {
          path[pos + 1] = lowest(vs);
          if (self(self, pos + 1)) return true;
        }
        return false;
      };
      auto backward = [&](auto&& self, int pos) -> bool {
        if (pos == 0) return forward(forward, before + 1);
        for (VertexMask us = in[path[pos]]; us != 0; us &= us - 1) {
          path[pos - 1] = lowest(us);
          if (self(self, pos - 1)) return true;
        }
        return false;
      };
      if (backward(backward, before)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  OrientationMode mode_;
  int length_;
  std::vector<Arc> edges_;
  std::vector<VertexMask> levels_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Orientation> find_orientation(const Graph& g,
                                            OrientationMode mode,
                                            int shortcut_length,
                                            SearchStats* stats) {
  if (mode == OrientationMode::kShortcutFree) {
    require(shortcut_length >= 3,
            "shortcut length must be at least 3, got " +
                std::to_string(shortcut_length));
  }
  std::vector<Arc> arcs;
  bool found = true;
  for (VertexMask component : components(g)) {
    if (popcount(component) < 2) continue;
    ComponentSearch search(g, component, mode, shortcut_length);
    const bool ok = search.run();
    if (stats) stats->nodes += search.nodes();
    if (!ok) {
      found = false;
      break;
    }
    const auto part = search.arcs();
    arcs.insert(arcs.end(), part.begin(), part.end());
  }
  if (!found) return std::nullopt;
  return Orientation(g, arcs);
}

std::optional<Orientation> find_semi_transitive_orientation(const Graph& g) {
  return find_orientation(g, OrientationMode::kSemiTransitive);
}

std::optional<Orientation> find_k_shortcut_free_orientation(const Graph& g,
                                                            int length) {
  return find_orientation(g, OrientationMode::kShortcutFree, length);
}

std::optional<Orientation> find_transitive_orientation(const Graph& g) {
  return find_orientation(g, OrientationMode::kTransitive);
}

bool is_word_representable(const Graph& g) {
  return find_semi_transitive_orientation(g).has_value();
}

}  // namespace wordrep
