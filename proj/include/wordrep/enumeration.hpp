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

#ifndef WORDREP_ENUMERATION_HPP_
#define WORDREP_ENUMERATION_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordrep/classify.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/isomorphism.hpp"

namespace wordrep {

// Worker count from WORDREP_JOBS, else the hardware concurrency.
int default_jobs();

// Hex SHA-256 of a file's contents.
std::string digest_file(const std::filesystem::path& path);

// Graphs of a graph6 stream, with line numbers in parse errors.
std::vector<Graph> read_graph6_stream(std::istream& in);
IsomorphismIndex load_index(std::istream& in);

struct EnumerateOptions {
  ClassifyOptions classify;
  int jobs = 0;  // 0: default_jobs()
  std::size_t chunk_size = 1000;
  std::optional<std::filesystem::path> checkpoint;
  std::optional<std::filesystem::path> records;      // JSON lines
  std::optional<std::filesystem::path> nwr_out;      // graph6 lines
  std::optional<std::filesystem::path> non_3st_out;  // graph6 lines
  // Bad graphs one vertex smaller; when set, every bad graph of the stream
  // is counted as minimal or non-minimal against it.
  std::shared_ptr<const IsomorphismIndex> nwr_prev;
  std::shared_ptr<const IsomorphismIndex> non_3st_prev;
  // Stop after this many newly completed chunks, leaving the checkpoint
  // behind as an interrupted run would.
  std::optional<std::size_t> stop_after_chunks;
};

struct EnumerationReport {
  std::vector<EnumerationSummary> summaries;  // ascending n
  std::size_t chunks = 0;                     // chunks merged in total
  std::size_t resumed_chunks = 0;             // taken from the checkpoint
  bool complete = true;
};

// Classifies every line of a graph6 stream in contiguous chunks on a worker
// pool and merges the per-chunk summaries in chunk order. Checkpointing
// needs `input_digest`, which guards against resuming on different input.
EnumerationReport enumerate_stream(std::istream& in,
                                   const EnumerateOptions& options,
                                   const std::string& input_digest = "");

EnumerationReport enumerate_file(const std::filesystem::path& path,
                                 const EnumerateOptions& options);

// True iff no one-vertex deletion of g is isomorphic to a graph of `prev`.
// For a connected g and prev holding every connected bad graph on one vertex
// fewer, of a hereditary property, this is exactly minimality: a bad
// induced subgraph of any size extends to a connected bad deletion.
bool is_minimal(const Graph& g, const IsomorphismIndex& prev);

struct MinimalityResult {
  std::vector<Graph> minimal;
  std::int64_t non_minimal = 0;
};

MinimalityResult minimal_nwr(std::span<const Graph> nwr_n,
                             const IsomorphismIndex& nwr_prev);

struct MinimalityReport {
  int n = 0;
  std::int64_t total = 0;
  std::int64_t minimal = 0;
  std::int64_t non_minimal = 0;
};

// Streaming, chunk-parallel form of minimal_nwr. Minimal graphs are written
// to `minimal_out` in input order when given.
MinimalityReport minimal_stream(std::istream& bad_n,
                                const IsomorphismIndex& bad_prev, int jobs,
                                std::size_t chunk_size,
                                std::ostream* minimal_out = nullptr);

struct SeparationResult {
  std::vector<std::string> graphs;  // graph6, input order
  std::int64_t count = 0;
  std::int64_t total = 0;
  std::int64_t non_3st = 0;
};

// Graphs with a 3-shortcut-free orientation but no semi-transitive one.
SeparationResult count_3st_not_st(std::istream& in, int jobs = 0,
                                  std::size_t chunk_size = 1000);

}  // namespace wordrep

#endif  // WORDREP_ENUMERATION_HPP_
