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

#include <random>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "wordrep/error.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/orientation_search.hpp"

namespace wordrep {
namespace {

using oracle::Property;

oracle::ArcMatrix matrix_of(const Orientation& o) {
  oracle::ArcMatrix m(o.order(), std::vector<char>(o.order(), 0));
  for (auto [u, v] : o.arcs()) m[u][v] = 1;
  return m;
}

Orientation orient(const Graph& g, std::initializer_list<Arc> arcs_1based) {
  std::vector<Arc> arcs;
  for (auto [u, v] : arcs_1based) arcs.emplace_back(u - 1, v - 1);
  return Orientation(g, arcs);
}

Graph underlying(int n, std::initializer_list<Arc> arcs_1based) {
  Graph g(n);
  for (auto [u, v] : arcs_1based) g.add_edge(u - 1, v - 1);
  return g;
}

Orientation part_to_part(int n) {
  const Graph crown = generate(Family::kCrown, n);
  std::vector<int> rank(2 * n);
  for (int v = 0; v < 2 * n; ++v) rank[v] = v < n ? 0 : 1;
  return Orientation::from_ranking(crown, rank);
}

// Every orientation of g, in mask order.
std::vector<Orientation> all_orientations(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Orientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      arcs.emplace_back(mask >> e & 1 ? Arc{v, u} : Arc{u, v});
    }
    out.emplace_back(g, arcs);
  }
  return out;
}

TEST(Orientation, ValidatesArcs) {
  const Graph p = generate(Family::kPath, 3);
  EXPECT_NO_THROW(orient(p, {{1, 2}, {3, 2}}));
  EXPECT_THROW(orient(p, {{1, 2}}), Error);
  EXPECT_THROW(orient(p, {{1, 2}, {2, 3}, {1, 3}}), Error);
  EXPECT_THROW(orient(p, {{1, 2}, {2, 1}, {2, 3}}), Error);
}

TEST(Orientation, ArcTextRoundTrip) {
  const Orientation o = part_to_part(3);
  EXPECT_EQ(format_arcs(o), "1->5,1->6,2->4,2->6,3->4,3->5");
  EXPECT_EQ(parse_arcs(o.base(), format_arcs(o)), o);
  EXPECT_THROW(parse_arcs(o.base(), "1->5"), Error);
  EXPECT_THROW(parse_arcs(o.base(), "1-5"), Error);
}

TEST(Orientation, Acyclicity) {
  const Graph c4 = generate(Family::kCycle, 4);
  EXPECT_FALSE(is_acyclic(orient(c4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  std::vector<int> identity = {0, 1, 2, 3};
  EXPECT_TRUE(is_acyclic(Orientation::from_ranking(c4, identity)));
  EXPECT_TRUE(is_acyclic(part_to_part(3)));
}

TEST(Shortcut, MinimalExample) {
  const std::initializer_list<Arc> arcs = {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}};
  const Orientation o = orient(underlying(4, arcs), arcs);
  const auto witness = find_shortcut(o);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->path, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(witness->missing, (std::pair<int, int>{1, 3}));
  EXPECT_TRUE(is_valid_shortcut(o, *witness));
  EXPECT_TRUE(find_shortcut(o, 3).has_value());
  EXPECT_FALSE(find_shortcut(o, 4).has_value());
  EXPECT_FALSE(is_semi_transitive_orientation(o));
}

TEST(Shortcut, TransitiveTournamentHasNone) {
  const Graph k4 = generate(Family::kComplete, 4);
  const std::vector<int> rank = {0, 1, 2, 3};
  EXPECT_FALSE(find_shortcut(Orientation::from_ranking(k4, rank)).has_value());
}

TEST(Shortcut, Contract) {
  const Graph c4 = generate(Family::kCycle, 4);
  const Orientation cyclic = orient(c4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  EXPECT_THROW(find_shortcut(cyclic), Error);
  EXPECT_THROW(find_shortcut(Orientation::from_ranking(c4, std::vector<int>{0, 1, 2, 3}), 2),
               Error);
  EXPECT_FALSE(is_semi_transitive_orientation(cyclic));
}

TEST(Shortcut, CrownPartToPart) {
  EXPECT_TRUE(is_semi_transitive_orientation(part_to_part(4)));
  EXPECT_TRUE(is_transitive_orientation(part_to_part(4)));
}

// Every acyclic orientation of every connected graph on up to 6 vertices,
// against path enumeration.
TEST(Shortcut, AgreesWithPathEnumeration) {
  std::size_t checked = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      if (g.size() > 11) continue;  // keeps the sweep short; all sizes run in acceptance
      for (const Orientation& o : all_orientations(g)) {
        if (!is_acyclic(o)) continue;
        const auto m = matrix_of(o);
        const auto any = find_shortcut(o);
        ASSERT_EQ(any.has_value(), oracle::has_shortcut(m, std::nullopt)) << format_arcs(o);
        if (any) {
          ASSERT_TRUE(is_valid_shortcut(o, *any));
          ASSERT_GE(any->path.size(), 4u);
        }
        for (int len = 3; len < n; ++len) {
          const auto fixed = find_shortcut(o, len);
          ASSERT_EQ(fixed.has_value(), oracle::has_shortcut(m, len)) << format_arcs(o);
          if (fixed) {
            ASSERT_EQ(fixed->path.size(), static_cast<std::size_t>(len + 1));
            ASSERT_TRUE(is_valid_shortcut(o, *fixed));
          }
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(Search, WheelFiveIsNotRepresentable) {
  const Graph w5 = generate(Family::kWheel, 5);
  EXPECT_FALSE(find_semi_transitive_orientation(w5).has_value());
  EXPECT_FALSE(is_word_representable(w5));
  EXPECT_FALSE(find_k_shortcut_free_orientation(w5, 3).has_value());
}

TEST(Search, CompleteGraphs) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_TRUE(is_word_representable(generate(Family::kComplete, n)));
  }
}

TEST(Search, ThreeColorableGraphsAreRepresentable) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> colour(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + trial % 9;
    std::vector<int> c(n);
    for (int& x : c) x = colour(rng);
    std::bernoulli_distribution coin(0.7);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (c[u] != c[v] && coin(rng)) g.add_edge(u, v);
      }
    }
    const auto o = find_semi_transitive_orientation(g);
    ASSERT_TRUE(o.has_value()) << edge_list_string(g);
    EXPECT_TRUE(is_semi_transitive_orientation(*o));
  }
}

TEST(Search, TransitiveExamples) {
  for (int n = 2; n <= 6; ++n) {
    const auto o = find_transitive_orientation(generate(Family::kCrown, n));
    ASSERT_TRUE(o.has_value());
    EXPECT_TRUE(is_transitive_orientation(*o));
  }
  const Graph c5 = generate(Family::kCycle, 5);
  EXPECT_FALSE(oracle::has_orientation(c5, Property::kTransitive));
  EXPECT_FALSE(find_transitive_orientation(c5).has_value());
  EXPECT_FALSE(find_transitive_orientation(generate(Family::kJ4, 0)).has_value());
  EXPECT_TRUE(find_transitive_orientation(generate(Family::kCrownApex, 4)).has_value());
}

TEST(Search, ShortcutLengthMustBeAtLeastThree) {
  EXPECT_THROW(find_k_shortcut_free_orientation(generate(Family::kPath, 3), 2), Error);
}

TEST(Search, FirstDirectionIsLowToHigh) {
  const auto o = find_semi_transitive_orientation(generate(Family::kPath, 4));
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(format_arcs(*o), "1->2,2->3,3->4");
}

void expect_sound_and_complete(const Graph& g) {
  const auto st = find_semi_transitive_orientation(g);
  const auto k3 = find_k_shortcut_free_orientation(g, 3);
  const auto k4 = find_k_shortcut_free_orientation(g, 4);
  const auto tr = find_transitive_orientation(g);
  ASSERT_EQ(st.has_value(), oracle::has_orientation(g, Property::kSemiTransitive))
      << edge_list_string(g);
  ASSERT_EQ(k3.has_value(), oracle::has_orientation(g, Property::kShortcutFree, 3))
      << edge_list_string(g);
  ASSERT_EQ(tr.has_value(), oracle::has_orientation(g, Property::kTransitive))
      << edge_list_string(g);
  if (st) {
    EXPECT_TRUE(oracle::satisfies(matrix_of(*st), Property::kSemiTransitive));
    EXPECT_TRUE(k3.has_value());
    EXPECT_TRUE(k4.has_value());
  }
  if (k3) {
    EXPECT_TRUE(oracle::satisfies(matrix_of(*k3), Property::kShortcutFree, 3));
  }
  if (k4) {
    EXPECT_TRUE(oracle::satisfies(matrix_of(*k4), Property::kShortcutFree, 4));
  }
  if (tr) {
    EXPECT_TRUE(oracle::satisfies(matrix_of(*tr), Property::kTransitive));
    EXPECT_TRUE(is_semi_transitive_orientation(*tr));
  }
}

TEST(Search, AgreesWithExhaustiveOracleUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) expect_sound_and_complete(g);
  }
}

TEST(Search, AgreesWithExhaustiveOracleOnRandomSevenVertexGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    expect_sound_and_complete(testing::random_graph(rng, 7, 0.35 + 0.1 * (trial % 3)));
  }
}

TEST(Search, DisconnectedGraphs) {
  Graph g(12);
  const Graph w5 = generate(Family::kWheel, 5);
  for (auto [u, v] : w5.edges()) g.add_edge(u, v);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  EXPECT_FALSE(is_word_representable(g));
  g = Graph(8);
  g.add_edge(0, 1);
  g.add_edge(5, 6);
  EXPECT_TRUE(is_word_representable(g));
}

TEST(Search, SevenVertexCount) {
  int bad = 0;
  for (const Graph& g : testing::connected_graphs(7)) bad += !is_word_representable(g);
  EXPECT_EQ(bad, 25);
}

}  // namespace
}  // namespace wordrep
