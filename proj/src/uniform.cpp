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

#include "wordrep/uniform.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/orientation_search.hpp"

namespace wordrep {

PositionAssignment::PositionAssignment(int n, int k, std::vector<int> positions)
    : n_(n), k_(k), positions_(std::move(positions)) {
  require(n >= 1 && n <= kMaxVertices, "alphabet size out of range");
  require(k >= 1, "multiplicity must be positive");
  require(positions_.size() == static_cast<std::size_t>(n) * k,
          "assignment needs n*k positions");
  std::vector<bool> used(static_cast<std::size_t>(n) * k + 1, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      const int p = position(i, j);
      require(p >= 1 && p <= n * k,
              "position " + std::to_string(p) + " outside 1.." +
                  std::to_string(n * k));
      require(!used[p], "position " + std::to_string(p) + " used twice");
      used[p] = true;
      require(j == 0 || position(i, j - 1) < p,
              "occurrence positions of letter " + std::to_string(i + 1) +
                  " must increase");
    }
  }
}

Word word_of_assignment(const PositionAssignment& a) {
  const int n = a.alphabet_size();
  const int k = a.multiplicity();
  std::vector<int> letters(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) letters[a.position(i, j) - 1] = i;
  }
  return Word(n, std::move(letters));
}

PositionAssignment assignment_of_word(const Word& w) {
  const int n = w.alphabet_size();
  require(n >= 1 && w.length() % n == 0, "word is not uniform");
  const int k = static_cast<int>(w.length()) / n;
  require(is_k_uniform(w, k), "word is not uniform");
  std::vector<int> positions(static_cast<std::size_t>(n) * k);
  std::vector<int> seen(n, 0);
  for (std::size_t p = 0; p < w.length(); ++p) {
    const int x = w[p];
    positions[static_cast<std::size_t>(x) * k + seen[x]++] =
        static_cast<int>(p) + 1;
  }
  return PositionAssignment(n, k, std::move(positions));
}

RepNumber RepNumber::finite(int k) {
  require(k >= 1, "representation numbers are positive");
  return RepNumber(k);
}

std::string RepNumber::to_string() const {
  return is_infinite() ? "inf" : std::to_string(value_);
}

namespace {

// Builds the word left to right. An edge pair must alternate in every
// prefix, so a letter may only recur once all its neighbours have appeared
// since its previous copy. A non-edge pair must stop alternating before
// either letter runs out: once x has all k copies placed, an unbroken pair
// {x, y} can no longer break.
class WordSearch {
 public:
  enum class Shape { kUniform, kPermutational };

  WordSearch(const Graph& g, int k, Shape shape)
      : g_(g),
        n_(g.order()),
        k_(k),
        length_(n_ * k),
        shape_(shape),
        count_(n_, 0),
        last_(n_, -1),
        letters_(length_, -1),
        broken_((static_cast<std::size_t>(length_) + 1) * n_, 0) {
    for (int v = 0; v < n_; ++v) {
      non_adjacent_.push_back(g.vertices() & ~g.neighbors(v) & ~bit(v));
    }
    // Rotations of a uniform representant represent the same graph, so the
    // word may start with any fixed letter; take the densest one.
    start_ = 0;
    for (int v = 1; v < n_; ++v) {
      if (g.degree(v) > g.degree(start_)) start_ = v;
    }
  }

  std::optional<Word> run() {
    if (!place_next(0)) return std::nullopt;
    return Word(n_, letters_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexMask* broken(int depth) {
    return broken_.data() + static_cast<std::size_t>(depth) * n_;
  }

  bool place_next(int p) {
    if (p == length_) return true;
    if (shape_ == Shape::kUniform) {
      if (p == 0) return place(p, start_);
      // Reversal: s t and s reverse(t) represent the same graph. Keep the
      // variant whose first gap between copies of s is no longer than the
      // wrap-around gap, i.e. the last s sits at or before length - second_.
      const int remaining = k_ - count_[start_];
      if (remaining > 0 && second_ > 0 &&
          (length_ - second_) - p + 1 < remaining) {
        return false;
      }
      for (int x = 0; x < n_; ++x) {
        if (count_[x] < k_ && place(p, x)) return true;
      }
      return false;
    }
    // Blocks may be reordered freely, so they are kept in lexicographically
    // non-decreasing order.
    const int block = p / n_;
    const bool tight = block > 0 && (p % n_ == 0 || tight_after_[p - 1]);
    const int floor = tight ? letters_[p - n_] : 0;
    for (int x = floor; x < n_; ++x) {
      if (count_[x] != block) continue;
      tight_after_[p] = tight && x == floor;
      if (place(p, x)) return true;
    }
    return false;
  }

  bool place(int p, int x) {
    ++nodes_;
    const VertexMask* cur = broken(p);
    VertexMask* next = broken(p + 1);
    std::copy(cur, cur + n_, next);
    if (count_[x] > 0) {
      // Letters not seen since the previous x no longer alternate with it.
      VertexMask stale = 0;
      for (int y = 0; y < n_; ++y) {
        if (y != x && last_[y] < last_[x]) stale |= bit(y);
      }
      if (stale & g_.neighbors(x)) return false;
      next[x] |= stale;
      for_each_bit(stale, [&](int y) { next[y] |= bit(x); });
    }
    if (count_[x] + 1 == k_ && (non_adjacent_[x] & ~next[x]) != 0) return false;

    const int saved_last = last_[x];
    const int saved_second = second_;
    ++count_[x];
    last_[x] = p;
    letters_[p] = x;
    if (x == start_ && count_[x] == 2) second_ = p;
    bool ok = true;
    if (shape_ == Shape::kPermutational && p == n_ - 1) {
      ok = first_block_consistent();
    }
    if (ok && place_next(p + 1)) return true;
    --count_[x];
    last_[x] = saved_last;
    second_ = saved_second;
    letters_[p] = -1;
    return false;
  }

  // Every block orders each edge pair the same way as the first block, so
  // the transitive closure of those edge directions holds in every block.
  // A non-edge pair inside that closure would alternate.
  bool first_block_consistent() const {
    std::vector<int> rank(n_);
    for (int p = 0; p < n_; ++p) rank[letters_[p]] = p;
    std::vector<VertexMask> reach(n_, 0);
    for (int p = n_ - 1; p >= 0; --p) {
      const int u = letters_[p];
      for_each_bit(g_.neighbors(u), [&](int v) {
        if (rank[v] > rank[u]) reach[u] |= bit(v) | reach[v];
      });
      if (reach[u] & non_adjacent_[u]) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int k_;
  int length_;
  Shape shape_;
  std::vector<int> count_;
  std::vector<int> last_;
  std::vector<int> letters_;
  std::vector<VertexMask> broken_;
  std::vector<VertexMask> non_adjacent_;
  std::vector<char> tight_after_ = std::vector<char>(length_, 0);
  int start_ = 0;
  int second_ = -1;
  std::uint64_t nodes_ = 0;
};

Word identity_permutations(int n, int k) {
  std::vector<int> letters;
  for (int j = 0; j < k; ++j) {
    for (int v = 0; v < n; ++v) letters.push_back(v);
  }
  return Word(n, std::move(letters));
}

}  // namespace

std::optional<Word> find_k_uniform_representant(const Graph& g, int k,
                                                UniformStats* stats) {
  require(k >= 1, "k must be positive, got " + std::to_string(k));
  require(g.order() >= 1, "graph must have at least one vertex");
  if (k == 1 || g.order() == 1) {
    if (!g.is_complete()) return std::nullopt;
    return identity_permutations(g.order(), k);
  }
  WordSearch search(g, k, WordSearch::Shape::kUniform);
  auto word = search.run();
  if (stats) stats->nodes += search.nodes();
  return word;
}

std::optional<Word> find_permutational_representant(const Graph& g, int k,
                                                    UniformStats* stats) {
  require(k >= 1, "k must be positive, got " + std::to_string(k));
  require(g.order() >= 1, "graph must have at least one vertex");
  if (g.is_complete()) return identity_permutations(g.order(), k);
  if (k == 1) return std::nullopt;
  WordSearch search(g, k, WordSearch::Shape::kPermutational);
  auto word = search.run();
  if (stats) stats->nodes += search.nodes();
  return word;
}

Representation representation_number(const Graph& g, std::optional<int> cap) {
  require(g.order() >= 1, "graph must have at least one vertex");
  const int limit = cap.value_or(2 * g.order());
  require(limit >= 1, "cap must be positive");
  if (!is_word_representable(g)) return Representation{};
  for (int k = 1; k <= limit; ++k) {
    if (auto word = find_k_uniform_representant(g, k)) {
      return Representation{RepNumber::finite(k), std::move(word)};
    }
  }
  fail(ErrorCode::kCapExceeded,
       "graph is word-representable but has no k-uniform representant for "
       "k <= " + std::to_string(limit));
}

}  // namespace wordrep
