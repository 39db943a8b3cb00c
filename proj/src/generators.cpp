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

#include "wordrep/generators.hpp"

#include <array>
#include <string>
#include <utility>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyEntry, 10> kFamilies = {{
    {Family::kComplete, "complete"},
    {Family::kEmpty, "empty"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kWheel, "wheel"},
    {Family::kPrism, "prism"},
    {Family::kPetersen, "petersen"},
    {Family::kCrown, "crown"},
    {Family::kCrownApex, "crown_apex"},
    {Family::kJ4, "j4"},
}};

void check_order(std::string_view family, int n, int min_n, int order) {
  require(n >= min_n, std::string(family) + " needs size >= " +
                          std::to_string(min_n) + ", got " + std::to_string(n));
  require(order <= kMaxVertices,
          std::string(family) + " of size " + std::to_string(n) + " has " +
              std::to_string(order) + " vertices, above the maximum of " +
              std::to_string(kMaxVertices));
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.family;
  }
  fail(ErrorCode::kUsage, "unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  for (const auto& entry : kFamilies) {
    if (entry.family == family) return entry.name;
  }
  return "?";
}

const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& entry : kFamilies) out.push_back(entry.name);
    return out;
  }();
  return names;
}

Graph complete_graph(int n) {
  check_order("complete", n, 1, n);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph empty_graph(int n) {
  check_order("empty", n, 1, n);
  return Graph(n);
}

Graph path_graph(int n) {
  check_order("path", n, 1, n);
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  check_order("cycle", n, 3, n);
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph wheel_graph(int n) {
  check_order("wheel", n, 3, n + 1);
  Graph g(n + 1);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n);
  }
  return g;
}

Graph prism_graph(int n) {
  check_order("prism", n, 3, 2 * n);
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph crown_graph(int n) {
  check_order("crown", n, 1, 2 * n);
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.add_edge(i, n + j);
    }
  }
  return g;
}

Graph crown_apex_graph(int n) {
  check_order("crown_apex", n, 1, 2 * n + 1);
  const Graph crown = crown_graph(n);
  Graph g(2 * n + 1);
  for (const auto& [i, j] : crown.edges()) g.add_edge(i, j);
  for (int v = 0; v < 2 * n; ++v) g.add_edge(v, 2 * n);
  return g;
}

Graph j4_graph() {
  static constexpr std::array<std::pair<int, int>, 18> kEdges = {{
      {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6},
      {1, 7}, {2, 7}, {4, 7}, {5, 7}, {1, 8}, {3, 8},
      {4, 8}, {6, 8}, {2, 9}, {3, 9}, {5, 9}, {6, 9},
  }};
  Graph g(9);
  for (const auto& [i, j] : kEdges) g.add_edge(i - 1, j - 1);
  return g;
}

Graph generate(Family family, int size) {
  switch (family) {
    case Family::kComplete: return complete_graph(size);
    case Family::kEmpty: return empty_graph(size);
    case Family::kPath: return path_graph(size);
    case Family::kCycle: return cycle_graph(size);
    case Family::kWheel: return wheel_graph(size);
    case Family::kPrism: return prism_graph(size);
    case Family::kCrown: return crown_graph(size);
    case Family::kCrownApex: return crown_apex_graph(size);
    case Family::kPetersen:
      require(size == 0 || size == 10, "petersen has exactly 10 vertices");
      return petersen_graph();
    case Family::kJ4:
      require(size == 0 || size == 9, "j4 has exactly 9 vertices");
      return j4_graph();
  }
  fail(ErrorCode::kInternal, "unhandled graph family");
}

}  // namespace wordrep
