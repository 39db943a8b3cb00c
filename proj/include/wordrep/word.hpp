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

#ifndef WORDREP_WORD_HPP_
#define WORDREP_WORD_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A finite word over the alphabet of internal labels 0..alphabet-1.
class Word {
 public:
  Word() = default;
  Word(int alphabet, std::vector<int> letters);

  int alphabet_size() const { return alphabet_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  int occurrences(int letter) const;
  bool contains(int letter) const { return occurrences(letter) > 0; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int alphabet_ = 0;
  std::vector<int> letters_;
};

// Text form uses labels 1..n: a digit string when the alphabet has at most 9
// letters, otherwise labels separated by spaces or commas. Digit strings are
// accepted only for alphabets of at most 9 letters. alphabet = 0 infers the
// alphabet size from the largest label.
Word parse_word(std::string_view text, int alphabet = 0);
std::string format_word(const Word& w);

// True iff the {x, y}-subsequence of w is xyxy... or yxyx...
bool alternate_in_word(const Word& w, int x, int y);

// The graph whose edges are exactly the alternating pairs. Every letter of
// the alphabet must occur.
Graph graph_of_word(const Word& w);

bool verify_representation(const Word& w, const Graph& g);

bool is_k_uniform(const Word& w, int k);

// Erases every copy of `letter` and shifts larger labels down by one.
Word erase_letter(const Word& w, int letter);

Word reversed(const Word& w);

// Applies perm to every letter.
Word relabel(const Word& w, std::span<const int> perm);

}  // namespace wordrep

#endif  // WORDREP_WORD_HPP_
