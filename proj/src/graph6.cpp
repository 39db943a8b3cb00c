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

#include "wordrep/graph6.hpp"

#include <algorithm>
#include <string>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int data_bytes_for(int n) {
  const int bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("empty graph6 record", base);

  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte value " + std::to_string(c) +
                           " outside the graph6 range 63..126",
                       base + i);
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > kMaxVertices) {
    throw ParseError("graph order " + std::to_string(n) +
                         " exceeds the supported maximum of " +
                         std::to_string(kMaxVertices),
                     base);
  }
  if (n == 0) throw ParseError("graph6 record with zero vertices", base);

  const std::size_t expected = 1 + static_cast<std::size_t>(data_bytes_for(n));
  if (line.size() != expected) {
    throw ParseError("graph6 record for n=" + std::to_string(n) + " needs " +
                         std::to_string(expected) + " bytes, found " +
                         std::to_string(line.size()),
                     base + std::min(line.size(), expected));
  }

  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices || n < 1) {
    fail(ErrorCode::kUsage,
         "graph6 encoding supports 1.." + std::to_string(kMaxVertices) +
             " vertices, got " + std::to_string(n));
  }
  std::string out(1 + data_bytes_for(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out[1 + k / 6] += static_cast<char>(1 << (5 - k % 6));
    }
  }
  return out;
}

}  // namespace wordrep
