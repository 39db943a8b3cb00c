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

#include "wordrep/graph.hpp"

#include <string>

#include "wordrep/error.hpp"

namespace wordrep {

Graph::Graph(int n) : n_(n) {
  require(n >= 0 && n <= kMaxVertices,
          "graph order must be between 0 and " + std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int i, int j) {
  require(i >= 0 && i < n_ && j >= 0 && j < n_, "edge endpoint out of range");
  require(i != j, "self-loops are not allowed");
  adj_[i] |= bit(j);
  adj_[j] |= bit(i);
}

void Graph::remove_edge(int i, int j) {
  require(i >= 0 && i < n_ && j >= 0 && j < n_, "edge endpoint out of range");
  adj_[i] &= ~bit(j);
  adj_[j] &= ~bit(i);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for_each_bit(adj_[i] & ~low_bits(i + 1),
                 [&](int j) { out.emplace_back(i, j); });
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.adj_[v] != b.adj_[v]) return false;
  }
  return true;
}

namespace {

VertexMask reachable_from(const Graph& g, int start) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable_from(g, 0) == g.vertices();
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertices();
  while (left != 0) {
    const VertexMask c = reachable_from(g, lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  require(v >= 0 && v < g.order(),
          "vertex " + std::to_string(v + 1) + " out of range");
  return induced_subgraph(g, VertexSet{g.vertices() & ~bit(v)});
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  require(!s.empty(), "induced subgraph needs a nonempty vertex set");
  require((s.members & ~g.vertices()) == 0, "vertex set exceeds the graph");
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_bit(s.members, [&](int v) { index[v] = k++; });
  Graph h(k);
  for_each_bit(s.members, [&](int u) {
    for_each_bit(g.neighbors(u) & s.members & ~low_bits(u + 1),
                 [&](int w) { h.add_edge(index[u], index[w]); });
  });
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == g.order(),
          "permutation size must match graph order");
  Graph h(g.order());
  for (const auto& [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
  return h;
}

std::string edge_list_string(const Graph& g) {
  std::string out;
  for (const auto& [i, j] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1) + '-' + std::to_string(j + 1);
  }
  return out;
}

}  // namespace wordrep
