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

#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "wordrep/error.hpp"

namespace wordrep {

Word::Word(int alphabet, std::vector<int> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  require(alphabet >= 0 && alphabet <= kMaxVertices,
          "alphabet size must be between 0 and " + std::to_string(kMaxVertices));
  for (int x : letters_) {
    require(x >= 0 && x < alphabet_,
            "letter " + std::to_string(x + 1) + " outside the alphabet 1.." +
                std::to_string(alphabet_));
  }
}

int Word::occurrences(int letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

Word parse_word(std::string_view text, int alphabet) {
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == ',' || c == '\t';
  });
  std::vector<int> labels;
  if (separated) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') {
        ++i;
        continue;
      }
      int value = 0;
      const auto [end, ec] =
          std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || value < 1) {
        throw ParseError("expected a positive letter label", i);
      }
      labels.push_back(value);
      i = static_cast<std::size_t>(end - text.data());
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '\n' || c == '\r') continue;
      if (c < '1' || c > '9') throw ParseError("expected a digit 1..9", i);
      labels.push_back(c - '0');
    }
  }
  if (labels.empty()) throw ParseError("empty word", 0);
  int largest = 0;
  for (int x : labels) largest = std::max(largest, x);
  if (alphabet == 0) alphabet = largest;
  if (!separated && alphabet > 9) {
    fail(ErrorCode::kUsage,
         "digit-string words need an alphabet of at most 9 letters; separate "
         "labels with spaces");
  }
  if (largest > alphabet) {
    fail(ErrorCode::kUsage, "letter " + std::to_string(largest) +
                                " outside the alphabet 1.." +
                                std::to_string(alphabet));
  }
  for (int& x : labels) --x;
  return Word(alphabet, std::move(labels));
}

std::string format_word(const Word& w) {
  std::string out;
  const bool digits = w.alphabet_size() <= 9;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

bool alternate_in_word(const Word& w, int x, int y) {
  require(x != y, "alternation needs two distinct letters");
  require(x >= 0 && x < w.alphabet_size() && y >= 0 && y < w.alphabet_size(),
          "letter outside the alphabet");
  int last = -1;
  bool seen_x = false, seen_y = false;
  bool alternating = true;
  for (int letter : w.letters()) {
    if (letter != x && letter != y) continue;
    (letter == x ? seen_x : seen_y) = true;
    if (letter == last) alternating = false;
    last = letter;
  }
  if (!seen_x || !seen_y) {
    fail(ErrorCode::kUsage, "letter " + std::to_string((seen_x ? y : x) + 1) +
                                " does not occur in the word");
  }
  return alternating;
}

Graph graph_of_word(const Word& w) {
  const int n = w.alphabet_size();
  std::vector<long> last(n, -1);
  std::vector<VertexMask> broken(n, 0);
  for (std::size_t p = 0; p < w.length(); ++p) {
    const int x = w[p];
    if (last[x] >= 0) {
      // Letters not seen since the previous x cannot alternate with x.
      VertexMask stale = 0;
      for (int y = 0; y < n; ++y) {
        if (y != x && last[y] < last[x]) stale |= bit(y);
      }
      broken[x] |= stale;
      for_each_bit(stale, [&](int y) { broken[y] |= bit(x); });
    }
    last[x] = static_cast<long>(p);
  }
  std::string absent;
  for (int v = 0; v < n; ++v) {
    if (last[v] < 0) absent += (absent.empty() ? "" : ",") + std::to_string(v + 1);
  }
  if (!absent.empty()) {
    fail(ErrorCode::kUsage, "word is missing letters " + absent);
  }
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for_each_bit(~broken[x] & low_bits(n) & ~low_bits(x + 1),
                 [&](int y) { g.add_edge(x, y); });
  }
  return g;
}

bool verify_representation(const Word& w, const Graph& g) {
  require(w.alphabet_size() == g.order(),
          "word alphabet size " + std::to_string(w.alphabet_size()) +
              " does not match graph order " + std::to_string(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (!w.contains(v)) return false;
  }
  return graph_of_word(w) == g;
}

bool is_k_uniform(const Word& w, int k) {
  std::vector<int> counts(w.alphabet_size(), 0);
  for (int x : w.letters()) ++counts[x];
  return std::all_of(counts.begin(), counts.end(),
                     [k](int c) { return c == k; });
}

Word erase_letter(const Word& w, int letter) {
  require(letter >= 0 && letter < w.alphabet_size(),
          "letter outside the alphabet");
  std::vector<int> out;
  out.reserve(w.length());
  for (int x : w.letters()) {
    if (x != letter) out.push_back(x > letter ? x - 1 : x);
  }
  return Word(w.alphabet_size() - 1, std::move(out));
}

Word reversed(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet_size(), std::move(out));
}

Word relabel(const Word& w, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == w.alphabet_size(),
          "permutation size must match the alphabet");
  std::vector<int> out;
  out.reserve(w.length());
  for (int x : w.letters()) out.push_back(perm[x]);
  return Word(w.alphabet_size(), std::move(out));
}

}  // namespace wordrep
