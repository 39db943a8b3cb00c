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

#ifndef WORDREP_GENERATORS_HPP_
#define WORDREP_GENERATORS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

enum class Family {
  kComplete,
  kEmpty,
  kPath,
  kCycle,
  kWheel,
  kPrism,
  kPetersen,
  kCrown,
  kCrownApex,
  kJ4,
};

Family parse_family(std::string_view name);
std::string_view family_name(Family family);
const std::vector<std::string_view>& family_names();

// `size` is the family parameter: n for complete/empty/path/cycle, the rim
// length for wheel and prism, the part size for crown and crown_apex. Fixed
// graphs (petersen, j4) accept 0 or their own order.
Graph generate(Family family, int size);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Rim 1..n, hub n+1.
Graph wheel_graph(int n);

// Two n-cycles 1..n and n+1..2n joined by the rungs i -- n+i.
Graph prism_graph(int n);

// Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
Graph petersen_graph();

// H_{n,n}: part 1..n, primed part n+1..2n (i' = n+i), edges i -- j' for i != j.
Graph crown_graph(int n);

// G_n: crown_graph(n) plus apex 2n+1 adjacent to every other vertex.
Graph crown_apex_graph(int n);

// The 9-vertex, 18-edge graph J_4 in its published labeling.
Graph j4_graph();

}  // namespace wordrep

#endif  // WORDREP_GENERATORS_HPP_
