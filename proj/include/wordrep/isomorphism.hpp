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

#ifndef WORDREP_ISOMORPHISM_HPP_
#define WORDREP_ISOMORPHISM_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Exact test by colour-refinement-pruned backtracking.
bool are_isomorphic(const Graph& g, const Graph& h);

// Cheap isomorphism invariant: order, edge count, sorted degree sequence.
struct InvariantKey {
  std::string bytes;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey invariant_key(const Graph& g);

struct InvariantKeyHash {
  std::size_t operator()(const InvariantKey& key) const {
    return std::hash<std::string>{}(key.bytes);
  }
};

// A set of graphs queried up to isomorphism.
class IsomorphismIndex {
 public:
  void insert(const Graph& g);
  bool contains(const Graph& g) const;
  std::size_t size() const { return size_; }

 private:
  std::unordered_map<InvariantKey, std::vector<Graph>, InvariantKeyHash>
      buckets_;
  std::size_t size_ = 0;
};

}  // namespace wordrep

#endif  // WORDREP_ISOMORPHISM_HPP_
