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

#ifndef WORDREP_CLASSIFY_HPP_
#define WORDREP_CLASSIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/uniform.hpp"

namespace wordrep {

struct ClassifyOptions {
  bool rep_number = false;
  bool k3 = false;
  std::optional<int> cap;  // default 2n
};

struct ClassificationRecord {
  std::string graph6;
  int n = 0;
  bool representable = false;
  std::optional<RepNumber> rep_number;
  std::optional<bool> k3_orientable;
};

// Semi-transitivity is always decided first; representation numbers and
// 3-shortcut-free orientability only when requested.
ClassificationRecord classify(const Graph& g, const ClassifyOptions& options);

// One JSON object per line with keys g6, n, wr, repnum, k3. repnum is an
// integer, "inf", or null when not computed; k3 is a boolean or null.
std::string to_json_line(const ClassificationRecord& record);
ClassificationRecord parse_record(std::string_view line);

// Aggregate counters for one vertex count.
struct EnumerationSummary {
  int n = 0;
  std::int64_t total = 0;
  std::int64_t nwr = 0;
  // Finite representation number -> count; present when computed. The
  // infinite bucket is `nwr`.
  std::optional<std::map<int, std::int64_t>> histogram;
  std::optional<std::int64_t> non_3st;
  // Graph6 of graphs with a 3-shortcut-free but no semi-transitive
  // orientation, in input order.
  std::vector<std::string> separated;
  std::optional<std::int64_t> minimal;
  std::optional<std::int64_t> non_minimal;
  std::optional<std::int64_t> minimal_non_3st;
  std::optional<std::int64_t> non_minimal_non_3st;
  double cpu_seconds = 0;

  void add(const ClassificationRecord& record);
  void merge(const EnumerationSummary& other);
  double percent_nwr() const;

  // Everything except cpu_seconds.
  bool same_counts(const EnumerationSummary& other) const;
};

// Single-line JSON object.
std::string summary_to_json(const EnumerationSummary& s,
                            bool include_timing = true);
EnumerationSummary summary_from_json(std::string_view text);

// CSV with one row per vertex count. Columns:
// n,total,nwr,percent,elapsed,minimal,non_minimal,non_3st,
// minimal_non_3st,non_minimal_non_3st,repnum_histogram
void write_summary_csv(std::ostream& out,
                       const std::vector<EnumerationSummary>& summaries);
std::vector<EnumerationSummary> read_summary_csv(std::istream& in);

}  // namespace wordrep

#endif  // WORDREP_CLASSIFY_HPP_
