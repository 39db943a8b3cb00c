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

#ifndef WORDREP_ORIENTATION_SEARCH_HPP_
#define WORDREP_ORIENTATION_SEARCH_HPP_

#include <cstdint>
#include <optional>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"

namespace wordrep {

enum class OrientationMode {
  kSemiTransitive,
  kShortcutFree,  // free of shortcuts with one fixed path length
  kTransitive,
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Exhaustive backtracking over edge directions. Edges are visited in a
// dense-first order; after every assignment the search rejects directed
// cycles and any violation whose arcs are all assigned already. The first
// edge of each component only tries its low -> high direction, since
// reversing every arc of a component preserves all three properties.
std::optional<Orientation> find_orientation(const Graph& g,
                                            OrientationMode mode,
                                            int shortcut_length = 3,
                                            SearchStats* stats = nullptr);

std::optional<Orientation> find_semi_transitive_orientation(const Graph& g);

// Acyclic orientation with no shortcut whose path has exactly `length` arcs.
std::optional<Orientation> find_k_shortcut_free_orientation(const Graph& g,
                                                            int length);

std::optional<Orientation> find_transitive_orientation(const Graph& g);

// A graph is word-representable iff it has a semi-transitive orientation.
bool is_word_representable(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_ORIENTATION_SEARCH_HPP_
