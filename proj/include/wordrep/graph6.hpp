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

#ifndef WORDREP_GRAPH6_HPP_
#define WORDREP_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "wordrep/graph.hpp"

namespace wordrep {

// Short-form graph6 (n <= 62), as written by nauty's geng. A leading
// ">>graph6<<" header and trailing line terminators are ignored.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_GRAPH6_HPP_
