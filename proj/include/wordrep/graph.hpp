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

#ifndef WORDREP_GRAPH_HPP_
#define WORDREP_GRAPH_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

// Vertex subsets are bitmasks over internal labels 0..n-1.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 62;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
constexpr VertexMask low_bits(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

// Calls fn(v) for each member of `m` in increasing order.
template <typename Fn>
inline void for_each_bit(VertexMask m, Fn&& fn) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

struct VertexSet {
  VertexMask members = 0;

  bool contains(int v) const { return (members & bit(v)) != 0; }
  int size() const { return popcount(members); }
  bool empty() const { return members == 0; }
};

// Simple undirected graph on internal vertices 0..n-1 (1..n in every text
// form). Row i of the adjacency matrix is a bitmask of the neighbours of i.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  bool has_edge(int i, int j) const { return (adj_[i] & bit(j)) != 0; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  VertexMask vertices() const { return low_bits(n_); }

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  // Edges as (i, j) pairs with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_complete() const { return size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

bool is_connected(const Graph& g);

// Connected components as vertex masks, ordered by lowest member.
std::vector<VertexMask> components(const Graph& g);

// Removes `v` and compacts the remaining labels in order.
Graph delete_vertex(const Graph& g, int v);

Graph induced_subgraph(const Graph& g, VertexSet s);

// Graph whose vertex perm[v] corresponds to vertex v of g.
Graph relabel(const Graph& g, std::span<const int> perm);

// Human-readable "1-2,1-3,..." listing.
std::string edge_list_string(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_GRAPH_HPP_
