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

#ifndef WORDREP_UNIFORM_HPP_
#define WORDREP_UNIFORM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// Occurrence positions of a k-uniform word: position(i, j) is the 1-based
// position of the j-th occurrence (0-based j) of letter i.
class PositionAssignment {
 public:
  // `positions` is row-major, n rows of k entries.
  PositionAssignment(int n, int k, std::vector<int> positions);

  int alphabet_size() const { return n_; }
  int multiplicity() const { return k_; }
  int position(int letter, int occurrence) const {
    return positions_[static_cast<std::size_t>(letter) * k_ + occurrence];
  }

  friend bool operator==(const PositionAssignment&,
                         const PositionAssignment&) = default;

 private:
  int n_;
  int k_;
  std::vector<int> positions_;
};

Word word_of_assignment(const PositionAssignment& a);

// Inverse of word_of_assignment; the word must be k-uniform for some k >= 1.
PositionAssignment assignment_of_word(const Word& w);

class RepNumber {
 public:
  static RepNumber infinite() { return RepNumber(0); }
  static RepNumber finite(int k);

  bool is_infinite() const { return value_ == 0; }
  // Only meaningful when finite.
  int value() const { return value_; }

  // Decimal value, or "inf".
  std::string to_string() const;

  friend bool operator==(const RepNumber&, const RepNumber&) = default;

 private:
  explicit RepNumber(int value) : value_(value) {}
  int value_;
};

struct Representation {
  RepNumber number = RepNumber::infinite();
  std::optional<Word> witness;  // present whenever number is finite
};

struct UniformStats {
  std::uint64_t nodes = 0;
};

// Exhaustive search for a k-uniform word representing g.
std::optional<Word> find_k_uniform_representant(const Graph& g, int k,
                                                UniformStats* stats = nullptr);

// Least k with a k-uniform representant, probing k = 1..cap (default 2n).
// Non-representable graphs get infinity without any word search; a
// representable graph with no representant up to the cap raises
// ErrorCode::kCapExceeded.
Representation representation_number(const Graph& g,
                                     std::optional<int> cap = std::nullopt);

// A concatenation of k permutations of the alphabet representing g.
std::optional<Word> find_permutational_representant(
    const Graph& g, int k, UniformStats* stats = nullptr);

}  // namespace wordrep

#endif  // WORDREP_UNIFORM_HPP_
