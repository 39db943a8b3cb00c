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

#include <map>
#include <random>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "wordrep/error.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/orientation_search.hpp"
#include "wordrep/uniform.hpp"

namespace wordrep {
namespace {

TEST(Assignment, WordOfAssignment) {
  const PositionAssignment a(3, 2, {1, 5, 3, 6, 2, 4});
  EXPECT_EQ(format_word(word_of_assignment(a)), "132312");
  EXPECT_EQ(format_word(word_of_assignment(PositionAssignment(1, 1, {1}))), "1");
}

TEST(Assignment, RejectsInvalidPositions) {
  EXPECT_THROW(PositionAssignment(2, 2, {1, 5, 2, 3}), Error);  // beyond kn
  EXPECT_THROW(PositionAssignment(2, 2, {1, 2, 2, 3}), Error);  // repeated
  EXPECT_THROW(PositionAssignment(2, 2, {2, 1, 3, 4}), Error);  // row not increasing
  EXPECT_THROW(PositionAssignment(2, 2, {1, 2, 3}), Error);     // wrong shape
  EXPECT_THROW(assignment_of_word(parse_word("112")), Error);
}

TEST(Assignment, RoundTrip) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const int k = 1 + trial % 4;
    std::vector<int> letters;
    for (int v = 0; v < n; ++v) letters.insert(letters.end(), k, v);
    std::shuffle(letters.begin(), letters.end(), rng);
    const Word word(n, letters);
    const PositionAssignment a = assignment_of_word(word);
    EXPECT_EQ(a.multiplicity(), k);
    EXPECT_EQ(word_of_assignment(a), word);
  }
}

TEST(RepNumber, Text) {
  EXPECT_EQ(RepNumber::infinite().to_string(), "inf");
  EXPECT_EQ(RepNumber::finite(3).to_string(), "3");
  EXPECT_THROW(RepNumber::finite(0), Error);
}

TEST(Uniform, Examples) {
  const Graph path = generate(Family::kPath, 3);
  const auto word = find_k_uniform_representant(path, 2);
  ASSERT_TRUE(word.has_value());
  EXPECT_TRUE(verify_representation(*word, path));
  EXPECT_TRUE(is_k_uniform(*word, 2));
  EXPECT_FALSE(find_k_uniform_representant(path, 1).has_value());

  const Graph w5 = generate(Family::kWheel, 5);
  for (int k = 1; k <= 4; ++k) EXPECT_FALSE(find_k_uniform_representant(w5, k).has_value());

  const Graph prism = generate(Family::kPrism, 3);
  EXPECT_FALSE(find_k_uniform_representant(prism, 2).has_value());
  const auto three = find_k_uniform_representant(prism, 3);
  ASSERT_TRUE(three.has_value());
  EXPECT_TRUE(verify_representation(*three, prism));
}

TEST(Uniform, CrownTwoHasRepresentationNumberTwo) {
  const Graph crown = generate(Family::kCrown, 2);
  const Representation r = representation_number(crown);
  EXPECT_EQ(r.number, RepNumber::finite(2));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(verify_representation(*r.witness, crown));
  // The literal two-copy word with 1'=3, 2'=4 gives K_{2,2} instead.
  Graph k22(4);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}) {
    k22.add_edge(u, v);
  }
  EXPECT_EQ(graph_of_word(parse_word("12342143")), k22);
  EXPECT_FALSE(verify_representation(parse_word("12342143"), crown));
}

TEST(Uniform, RepresentationNumbers) {
  for (int n = 1; n <= 6; ++n) {
    const Representation r = representation_number(generate(Family::kComplete, n));
    EXPECT_EQ(r.number, RepNumber::finite(1));
    ASSERT_TRUE(r.witness.has_value());
  }
  EXPECT_TRUE(representation_number(generate(Family::kWheel, 5)).number.is_infinite());
  EXPECT_FALSE(representation_number(generate(Family::kWheel, 5)).witness.has_value());
  EXPECT_EQ(representation_number(generate(Family::kCycle, 6)).number, RepNumber::finite(2));
  EXPECT_EQ(representation_number(generate(Family::kPrism, 3)).number, RepNumber::finite(3));
  EXPECT_EQ(representation_number(Graph(1)).number, RepNumber::finite(1));
  EXPECT_EQ(representation_number(Graph(3)).number, RepNumber::finite(2));
}

TEST(Uniform, CapExceededIsAnError) {
  try {
    representation_number(generate(Family::kPrism, 3), 2);
    FAIL() << "expected cap-exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(representation_number(generate(Family::kPath, 3), 0), Error);
}

TEST(Uniform, AgreesWithExhaustiveWordOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      for (int k = 1; k <= 3; ++k) {
        const auto word = find_k_uniform_representant(g, k);
        EXPECT_EQ(word.has_value(), oracle::has_uniform_word(g, k)) << edge_list_string(g);
        if (word) {
          EXPECT_TRUE(verify_representation(*word, g));
          EXPECT_TRUE(is_k_uniform(*word, k));
        }
      }
    }
  }
  for (const Graph& g : testing::connected_graphs(5)) {
    EXPECT_EQ(find_k_uniform_representant(g, 2).has_value(), oracle::has_uniform_word(g, 2))
        << edge_list_string(g);
  }
  // Disconnected inputs too.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 4, 0.4);
    EXPECT_EQ(find_k_uniform_representant(g, 2).has_value(), oracle::has_uniform_word(g, 2))
        << edge_list_string(g);
  }
}

TEST(Uniform, FiniteExactlyWhenRepresentable) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const Representation r = representation_number(g);
      ASSERT_EQ(r.number.is_infinite(), !is_word_representable(g)) << edge_list_string(g);
      if (!r.number.is_infinite()) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(verify_representation(*r.witness, g));
        EXPECT_TRUE(is_k_uniform(*r.witness, r.number.value()));
        EXPECT_EQ(r.number.value() == 1, g.is_complete());
      }
    }
  }
}

TEST(Uniform, MonotoneInMultiplicity) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      bool found = false;
      for (int k = 1; k <= 4; ++k) {
        const bool now = find_k_uniform_representant(g, k).has_value();
        EXPECT_TRUE(!found || now) << edge_list_string(g) << " k=" << k;
        found = now;
      }
    }
  }
}

TEST(Uniform, HistogramsForSmallOrders) {
  const std::map<int, std::map<int, int>> expected = {
      {3, {{1, 1}, {2, 1}}},
      {4, {{1, 1}, {2, 5}}},
      {5, {{1, 1}, {2, 20}}},
      {6, {{1, 1}, {2, 109}, {3, 1}, {0, 1}}},
  };
  for (const auto& [n, histogram] : expected) {
    std::map<int, int> got;
    for (const Graph& g : testing::connected_graphs(n)) {
      const RepNumber r = representation_number(g).number;
      ++got[r.is_infinite() ? 0 : r.value()];
    }
    EXPECT_EQ(got, histogram) << "n=" << n;
  }
}

TEST(Permutational, Examples) {
  const auto crown = find_permutational_representant(generate(Family::kCrown, 3), 3);
  ASSERT_TRUE(crown.has_value());
  EXPECT_TRUE(verify_representation(*crown, generate(Family::kCrown, 3)));
  const Graph c5 = generate(Family::kCycle, 5);
  for (int k = 1; k <= 10; ++k) EXPECT_FALSE(find_permutational_representant(c5, k).has_value());
  EXPECT_TRUE(find_permutational_representant(generate(Family::kComplete, 5), 1).has_value());
  EXPECT_FALSE(find_permutational_representant(generate(Family::kPath, 3), 1).has_value());
}

bool is_block_word(const Word& word) {
  const int n = word.alphabet_size();
  for (std::size_t start = 0; start < word.length(); start += n) {
    VertexMask seen = 0;
    for (int i = 0; i < n; ++i) seen |= bit(word[start + i]);
    if (seen != low_bits(n)) return false;
  }
  return true;
}

TEST(Permutational, AgreesWithOracleAndComparability) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const bool comparability = find_transitive_orientation(g).has_value();
      bool any = false;
      for (int k = 1; k <= 3; ++k) {
        const auto word = find_permutational_representant(g, k);
        if (n <= 4) {
          EXPECT_EQ(word.has_value(), oracle::has_permutational_word(g, k))
              << edge_list_string(g) << " k=" << k;
        }
        if (word) {
          any = true;
          EXPECT_TRUE(verify_representation(*word, g));
          EXPECT_TRUE(is_k_uniform(*word, k));
          EXPECT_TRUE(is_block_word(*word));
        }
      }
      EXPECT_EQ(any, comparability) << edge_list_string(g);
    }
  }
}

TEST(Permutational, ComparabilityOnSixVertices) {
  // A comparability graph on n vertices has dimension at most n/2 for n >= 4.
  for (const Graph& g : testing::connected_graphs(6)) {
    const bool comparability = find_transitive_orientation(g).has_value();
    bool any = false;
    for (int k = 1; k <= 3 && !any; ++k) {
      any = find_permutational_representant(g, k).has_value();
    }
    EXPECT_EQ(any, comparability) << edge_list_string(g);
  }
}

}  // namespace
}  // namespace wordrep
