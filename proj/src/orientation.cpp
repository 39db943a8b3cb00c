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

#include "wordrep/orientation.hpp"

#include <charconv>
#include <deque>
#include <string>

#include "wordrep/error.hpp"

namespace wordrep {

Orientation::Orientation(const Graph& base, std::span<const Arc> arcs)
    : base_(base) {
  const int n = base.order();
  for (const auto& [u, v] : arcs) {
    require(u >= 0 && u < n && v >= 0 && v < n, "arc endpoint out of range");
    require(base.has_edge(u, v), "arc " + std::to_string(u + 1) + "->" +
                                     std::to_string(v + 1) +
                                     " is not an edge of the graph");
    require(!has_arc(u, v) && !has_arc(v, u),
            "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                " oriented twice");
    out_[u] |= bit(v);
  }
  require(static_cast<int>(arcs.size()) == base.size(),
          "orientation leaves " + std::to_string(base.size() - arcs.size()) +
              " edges undirected");
}

Orientation Orientation::from_ranking(const Graph& base,
                                      std::span<const int> rank) {
  require(static_cast<int>(rank.size()) == base.order(),
          "ranking size must match graph order");
  std::vector<Arc> arcs;
  for (const auto& [i, j] : base.edges()) {
    arcs.push_back(rank[i] < rank[j] ? Arc{i, j} : Arc{j, i});
  }
  return Orientation(base, arcs);
}

VertexMask Orientation::in(int v) const {
  VertexMask m = 0;
  for (int u = 0; u < order(); ++u) {
    if (out_[u] & bit(v)) m |= bit(u);
  }
  return m;
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < order(); ++u) {
    for_each_bit(out_[u], [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Orientation Orientation::reversed() const {
  Orientation r;
  r.base_ = base_;
  for (int u = 0; u < order(); ++u) {
    for_each_bit(out_[u], [&](int v) { r.out_[v] |= bit(u); });
  }
  return r;
}

bool operator==(const Orientation& a, const Orientation& b) {
  if (!(a.base_ == b.base_)) return false;
  for (int v = 0; v < a.order(); ++v) {
    if (a.out_[v] != b.out_[v]) return false;
  }
  return true;
}

bool is_acyclic(const Orientation& o) {
  // Kahn's algorithm on bitmask rows.
  const int n = o.order();
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u) {
    for_each_bit(o.out(u), [&](int v) { ++indegree[v]; });
  }
  VertexMask ready = 0;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready |= bit(v);
  }
  int removed = 0;
  while (ready != 0) {
    const int u = lowest(ready);
    ready &= ready - 1;
    ++removed;
    for_each_bit(o.out(u), [&](int v) {
      if (--indegree[v] == 0) ready |= bit(v);
    });
  }
  return removed == n;
}

std::vector<VertexMask> transitive_closure(const Orientation& o) {
  const int n = o.order();
  std::vector<VertexMask> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = o.out(v);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (reach[i] & bit(k)) reach[i] |= reach[k];
    }
  }
  return reach;
}

namespace {

std::vector<VertexMask> ancestors_from(const std::vector<VertexMask>& desc) {
  std::vector<VertexMask> anc(desc.size(), 0);
  for (std::size_t u = 0; u < desc.size(); ++u) {
    for_each_bit(desc[u], [&](int v) { anc[v] |= bit(static_cast<int>(u)); });
  }
  return anc;
}

// Shortest directed path from `from` to `to`; both endpoints included.
std::vector<int> directed_path(const Orientation& o, int from, int to) {
  if (from == to) return {from};
  std::vector<int> parent(o.order(), -1);
  std::deque<int> queue{from};
  VertexMask seen = bit(from);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for_each_bit(o.out(u) & ~seen, [&](int v) {
      seen |= bit(v);
      parent[v] = u;
      queue.push_back(v);
    });
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.insert(path.begin(), v);
  return path;
}

std::optional<std::pair<int, int>> first_missing_pair(
    const Orientation& o, const std::vector<int>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (!o.has_arc(path[i], path[j])) return std::make_pair(path[i], path[j]);
    }
  }
  return std::nullopt;
}

std::optional<ShortcutWitness> find_any_shortcut(const Orientation& o) {
  const auto desc = transitive_closure(o);
  const auto anc = ancestors_from(desc);
  const Graph& g = o.base();
  // Every vertex on a u-v path lies in desc(u) & anc(v); a shortcut through
  // the chord u -> v exists iff two comparable vertices there are non-adjacent.
  for (int u = 0; u < o.order(); ++u) {
    for (VertexMask heads = o.out(u); heads != 0; heads &= heads - 1) {
      const int v = lowest(heads);
      const VertexMask span = (desc[u] & anc[v]) | bit(u) | bit(v);
      for (VertexMask xs = span; xs != 0; xs &= xs - 1) {
        const int x = lowest(xs);
        const VertexMask bad = desc[x] & span & ~g.neighbors(x);
        if (bad == 0) continue;
        const int y = lowest(bad);
        std::vector<int> path = directed_path(o, u, x);
        const auto middle = directed_path(o, x, y);
        const auto tail = directed_path(o, y, v);
        path.insert(path.end(), middle.begin() + 1, middle.end());
        path.insert(path.end(), tail.begin() + 1, tail.end());
        return ShortcutWitness{std::move(path), {x, y}};
      }
    }
  }
  return std::nullopt;
}

class FixedLengthSearch {
 public:
  FixedLengthSearch(const Orientation& o, int length) : o_(o), length_(length) {}

  std::optional<ShortcutWitness> run() {
    for (int u = 0; u < o_.order(); ++u) {
      path_.assign(1, u);
      if (extend()) return std::move(found_);
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const int tail = path_.back();
    if (static_cast<int>(path_.size()) == length_ + 1) {
      if (!o_.has_arc(path_.front(), tail)) return false;
      if (auto missing = first_missing_pair(o_, path_)) {
        found_ = ShortcutWitness{path_, *missing};
        return true;
      }
      return false;
    }
    bool hit = false;
    for_each_bit(o_.out(tail), [&](int v) {
      if (hit) return;
      path_.push_back(v);
      hit = extend();
      if (!hit) path_.pop_back();
    });
    return hit;
  }

  const Orientation& o_;
  int length_;
  std::vector<int> path_;
  std::optional<ShortcutWitness> found_;
};

}  // namespace

std::optional<ShortcutWitness> find_shortcut(const Orientation& o,
                                             std::optional<int> length) {
  require(!length || *length >= 3,
          "shortcut paths have at least 3 arcs, got " +
              std::to_string(length.value_or(0)));
  require(is_acyclic(o), "shortcut search requires an acyclic orientation");
  if (!length) return find_any_shortcut(o);
  return FixedLengthSearch(o, *length).run();
}

bool is_valid_shortcut(const Orientation& o, const ShortcutWitness& w) {
  const auto& p = w.path;
  if (p.size() < 4) return false;
  for (int v : p) {
    if (v < 0 || v >= o.order()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!o.has_arc(p[i], p[i + 1])) return false;
  }
  if (!o.has_arc(p.front(), p.back())) return false;
  std::size_t i = p.size(), j = p.size();
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p[t] == w.missing.first) i = t;
    if (p[t] == w.missing.second) j = t;
  }
  return i < j && j < p.size() && !o.has_arc(p[i], p[j]);
}

bool is_semi_transitive_orientation(const Orientation& o) {
  return is_acyclic(o) && !find_any_shortcut(o);
}

bool is_shortcut_free(const Orientation& o, int length) {
  return is_acyclic(o) && !find_shortcut(o, length);
}

bool is_transitive_orientation(const Orientation& o) {
  for (int u = 0; u < o.order(); ++u) {
    bool closed = true;
    for_each_bit(o.out(u), [&](int v) {
      if ((o.out(v) & ~o.out(u)) != 0) closed = false;
    });
    if (!closed) return false;
  }
  // Transitivity plus antisymmetry rules out cycles: a cycle would force a
  // loop arc.
  return true;
}

std::string format_arcs(const Orientation& o) {
  std::string out;
  for (const auto& [u, v] : o.arcs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u + 1) + "->" + std::to_string(v + 1);
  }
  return out;
}

Orientation parse_arcs(const Graph& base, std::string_view text) {
  std::vector<Arc> arcs;
  std::size_t i = 0;
  auto number = [&]() {
    int value = 0;
    const auto [end, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected a vertex label", i);
    i = static_cast<std::size_t>(end - text.data());
    return value - 1;
  };
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ' || text[i] == '\n') {
      ++i;
      continue;
    }
    const int u = number();
    if (text.substr(i, 2) != "->") throw ParseError("expected '->'", i);
    i += 2;
    const int v = number();
    arcs.emplace_back(u, v);
  }
  return Orientation(base, arcs);
}

}  // namespace wordrep
