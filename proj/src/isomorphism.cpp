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

#include "wordrep/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

namespace wordrep {

namespace {

using Colouring = std::vector<int>;

// Refines both colourings jointly so that colour ids are comparable across
// the two graphs. Returns false as soon as the colour histograms differ.
bool refine_jointly(const Graph& g, const Graph& h, Colouring& cg,
                    Colouring& ch) {
  const int n = g.order();
  cg.assign(n, 0);
  ch.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  int classes = -1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& graph, const Colouring& c, int v) {
      std::vector<int> around;
      for_each_bit(graph.neighbors(v), [&](int w) { around.push_back(c[w]); });
      std::sort(around.begin(), around.end());
      return std::make_pair(c[v], std::move(around));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (int v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> count_g(next, 0), count_h(next, 0);
    for (int v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
      ++count_g[cg[v]];
      ++count_h[ch[v]];
    }
    if (count_g != count_h) return false;
    if (next == classes) return true;
    classes = next;
  }
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, const Colouring& cg,
          const Colouring& ch)
      : g_(g), h_(h), cg_(cg), ch_(ch) {
    const int n = g.order();
    std::vector<int> class_size(n + 1, 0);
    for (int c : cg) {
      if (c >= static_cast<int>(class_size.size())) class_size.resize(c + 1, 0);
      ++class_size[c];
    }
    // Smallest colour class first, then most links to already-ordered
    // vertices.
    VertexMask placed = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const int links_v = popcount(g.neighbors(v) & placed);
        const int links_b = popcount(g.neighbors(best) & placed);
        if (links_v != links_b) {
          if (links_v > links_b) best = v;
          continue;
        }
        if (class_size[cg[v]] < class_size[cg[best]]) best = v;
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < h_.order(); ++w) {
      if ((used & bit(w)) || ch_[w] != cg_[v]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const int u = order_[d];
        consistent = g_.has_edge(u, v) == h_.has_edge(image_[d], w);
      }
      if (!consistent) continue;
      image_[depth] = w;
      if (extend(depth + 1, used | bit(w))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const Colouring& cg_;
  const Colouring& ch_;
  std::vector<int> order_;
  std::array<int, kMaxVertices> image_{};
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (invariant_key(g) != invariant_key(h)) return false;
  Colouring cg, ch;
  if (!refine_jointly(g, h, cg, ch)) return false;
  return Matcher(g, h, cg, ch).run();
}

InvariantKey invariant_key(const Graph& g) {
  std::string bytes;
  bytes.push_back(static_cast<char>(g.order()));
  const int m = g.size();
  bytes.push_back(static_cast<char>(m & 0xff));
  bytes.push_back(static_cast<char>(m >> 8));
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  for (int d : degrees) bytes.push_back(static_cast<char>(d));
  return InvariantKey{std::move(bytes)};
}

void IsomorphismIndex::insert(const Graph& g) {
  buckets_[invariant_key(g)].push_back(g);
  ++size_;
}

bool IsomorphismIndex::contains(const Graph& g) const {
  const auto it = buckets_.find(invariant_key(g));
  if (it == buckets_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const Graph& other) { return are_isomorphic(g, other); });
}

}  // namespace wordrep
