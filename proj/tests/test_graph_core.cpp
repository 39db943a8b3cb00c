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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wordrep/error.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/isomorphism.hpp"

namespace wordrep {
namespace {

using testing::connected_graphs;
using testing::random_graph;

Graph edges_1based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

TEST(Graph6, TriangleAndSingleVertex) {
  EXPECT_EQ(parse_graph6("Bw"), generate(Family::kComplete, 3));
  const Graph one = parse_graph6("@");
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.size(), 0);
  EXPECT_EQ(encode_graph6(generate(Family::kComplete, 3)), "Bw");
  EXPECT_EQ(encode_graph6(Graph(2)), "A?");
}

TEST(Graph6, ToleratesHeaderAndLineEnd) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), generate(Family::kComplete, 3));
  EXPECT_EQ(parse_graph6("Bw\r\n"), generate(Family::kComplete, 3));
}

TEST(Graph6, RoundTripsGengOutput) {
  const auto graphs = connected_graphs(5);
  ASSERT_EQ(graphs.size(), 21u);
  std::ifstream in(testing::graphs_file(5));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(encode_graph6(parse_graph6(line)), line);
    ++count;
  }
  EXPECT_EQ(count, 21);
}

TEST(Graph6, RoundTripsGenerators) {
  for (auto name : family_names()) {
    const Family f = parse_family(name);
    for (int size : {0, 1, 2, 3, 4, 5, 8, 20}) {
      Graph g;
      try {
        g = generate(f, size);
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(parse_graph6(encode_graph6(g)), g) << name << " " << size;
    }
  }
  Graph big(62);
  for (int v = 1; v < 62; ++v) big.add_edge(v - 1, v);
  EXPECT_EQ(parse_graph6(encode_graph6(big)), big);
}

TEST(Graph6, RejectsMalformedInput) {
  auto code = [](std::string_view text) {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code(""), ErrorCode::kParse);
  EXPECT_EQ(code("B"), ErrorCode::kParse);       // too short
  EXPECT_EQ(code("Bww"), ErrorCode::kParse);     // too long
  EXPECT_EQ(code("B\x20"), ErrorCode::kParse);   // byte below 63
  EXPECT_EQ(code("B\x7f"), ErrorCode::kParse);   // byte above 126
  EXPECT_EQ(code("~??"), ErrorCode::kParse);     // long form, n > 62
  EXPECT_EQ(code("\x7e"), ErrorCode::kParse);
}

TEST(GraphCore, Connectivity) {
  EXPECT_TRUE(is_connected(generate(Family::kComplete, 4)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(generate(Family::kCrown, 3)));
  EXPECT_TRUE(are_isomorphic(generate(Family::kCrown, 3), generate(Family::kCycle, 6)));
}

TEST(GraphCore, DeleteVertex) {
  EXPECT_EQ(delete_vertex(generate(Family::kCrownApex, 4), 8), generate(Family::kCrown, 4));
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(delete_vertex(generate(Family::kComplete, 4), v),
              generate(Family::kComplete, 3));
  }
  EXPECT_TRUE(are_isomorphic(delete_vertex(generate(Family::kCycle, 6), 2),
                             generate(Family::kPath, 5)));
  EXPECT_THROW(delete_vertex(generate(Family::kPath, 3), 3), Error);
}

TEST(GraphCore, DeleteVertexCompactsLabels) {
  const Graph g = edges_1based(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(delete_vertex(g, 1), edges_1based(3, {{1, 3}}));
}

TEST(GraphCore, InducedSubgraph) {
  const Graph g4 = generate(Family::kCrownApex, 4);
  EXPECT_EQ(induced_subgraph(g4, VertexSet{g4.vertices()}), g4);
  EXPECT_EQ(induced_subgraph(g4, VertexSet{0b111}), Graph(3));
  const Graph k6 = generate(Family::kComplete, 6);
  for (int skip = 0; skip < 6; ++skip) {
    EXPECT_EQ(induced_subgraph(k6, VertexSet{k6.vertices() & ~bit(skip)}),
              generate(Family::kComplete, 5));
  }
  EXPECT_THROW(induced_subgraph(k6, VertexSet{}), Error);
}

TEST(Generators, CrownTwoLabeling) {
  EXPECT_EQ(generate(Family::kCrown, 2), edges_1based(4, {{1, 4}, {2, 3}}));
}

TEST(Generators, CrownApexFour) {
  const Graph g = generate(Family::kCrownApex, 4);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 20);
  EXPECT_EQ(g.degree(8), 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g.has_edge(i, 4 + j), i != j);
  }
}

TEST(Generators, WheelFive) {
  const Graph g = generate(Family::kWheel, 5);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 10);
  EXPECT_EQ(g.degree(5), 5);
  EXPECT_EQ(delete_vertex(g, 5), generate(Family::kCycle, 5));
}

TEST(Generators, J4EdgeList) {
  const Graph j4 = generate(Family::kJ4, 0);
  const Graph expected = edges_1based(
      9, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 7}, {2, 7}, {4, 7},
          {5, 7}, {1, 8}, {3, 8}, {4, 8}, {6, 8}, {2, 9}, {3, 9}, {5, 9}, {6, 9}});
  EXPECT_EQ(j4, expected);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(j4.degree(v), 4);
}

TEST(Generators, CrownIsBipartiteAndRegular) {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = generate(Family::kCrown, n);
    for (int v = 0; v < 2 * n; ++v) {
      EXPECT_EQ(g.degree(v), n - 1);
      const VertexMask own_side = v < n ? low_bits(n) : low_bits(2 * n) & ~low_bits(n);
      EXPECT_EQ(g.neighbors(v) & own_side, 0u);
    }
  }
}

TEST(Generators, ApexDeletionGivesCrown) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_TRUE(are_isomorphic(delete_vertex(generate(Family::kCrownApex, n), 2 * n),
                               generate(Family::kCrown, n)));
  }
}

TEST(Generators, PetersenAndPrism) {
  const Graph p = generate(Family::kPetersen, 0);
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  const Graph prism = generate(Family::kPrism, 3);
  EXPECT_EQ(prism.order(), 6);
  EXPECT_EQ(prism.size(), 9);
  EXPECT_TRUE(are_isomorphic(generate(Family::kPrism, 4), generate(Family::kCrown, 4)));
}

TEST(Generators, RejectsBadInput) {
  EXPECT_THROW(parse_family("hypercube"), Error);
  EXPECT_THROW(generate(Family::kCycle, 2), Error);
  EXPECT_THROW(generate(Family::kComplete, 63), Error);
  EXPECT_THROW(generate(Family::kPetersen, 7), Error);
}

TEST(Isomorphism, Examples) {
  const Graph path = generate(Family::kPath, 3);
  const std::vector<int> perm = {2, 0, 1};
  EXPECT_TRUE(are_isomorphic(path, relabel(path, perm)));
  EXPECT_FALSE(are_isomorphic(generate(Family::kPrism, 3), generate(Family::kCrown, 3)));
  // K_{3,3}
  Graph k33(6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  }
  EXPECT_FALSE(are_isomorphic(generate(Family::kPrism, 3), k33));
  const Graph j4 = generate(Family::kJ4, 9);
  const std::vector<int> swap_sides = {3, 4, 5, 0, 1, 2, 6, 7, 8};
  EXPECT_TRUE(are_isomorphic(j4, relabel(j4, swap_sides)));
  EXPECT_FALSE(are_isomorphic(j4, generate(Family::kCrownApex, 4)));
}

TEST(Isomorphism, EquivalenceOnRandomPool) {
  std::mt19937 rng(7);
  std::vector<Graph> pool;
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(rng, 7, 0.45);
    pool.push_back(g);
    pool.push_back(relabel(g, testing::random_permutation(rng, 7)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_TRUE(are_isomorphic(pool[i], pool[i]));
    if (i % 2 == 0) {
      EXPECT_TRUE(are_isomorphic(pool[i], pool[i + 1]));
    }
    for (std::size_t j = i + 1; j < pool.size(); j += 7) {
      EXPECT_EQ(are_isomorphic(pool[i], pool[j]), are_isomorphic(pool[j], pool[i]));
      for (std::size_t k = j + 1; k < pool.size(); k += 11) {
        if (are_isomorphic(pool[i], pool[j]) && are_isomorphic(pool[j], pool[k])) {
          EXPECT_TRUE(are_isomorphic(pool[i], pool[k]));
        }
      }
    }
  }
}

TEST(Isomorphism, GengClassesAreDistinct) {
  // geng emits one graph per isomorphism class; relabeled copies must still
  // be found in the index and no two classes may collide.
  std::mt19937 rng(11);
  const auto graphs = connected_graphs(6);
  IsomorphismIndex index;
  for (const Graph& g : graphs) {
    EXPECT_FALSE(index.contains(g));
    index.insert(g);
  }
  EXPECT_EQ(index.size(), graphs.size());
  for (const Graph& g : graphs) {
    EXPECT_TRUE(index.contains(relabel(g, testing::random_permutation(rng, 6))));
  }
  EXPECT_FALSE(index.contains(generate(Family::kComplete, 7)));
}

}  // namespace
}  // namespace wordrep
