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

#include "wordrep/enumeration.hpp"

#include <openssl/evp.h>
#include <time.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>
#include <thread>

#include "chunk_pool.hpp"
#include "json.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/orientation_search.hpp"

namespace wordrep {

namespace fs = std::filesystem;
using nlohmann::json;
using internal::Chunk;
using internal::ChunkReader;

int default_jobs() {
  if (const char* env = std::getenv("WORDREP_JOBS"); env && *env) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end && *end == '\0' && value >= 1 && value <= 4096) {
      return static_cast<int>(value);
    }
    fail(ErrorCode::kUsage, std::string("WORDREP_JOBS must be a positive "
                                        "integer, got '") + env + "'");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string digest_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (in.gcount() > 0) {
      EVP_DigestUpdate(ctx, buffer.data(), static_cast<std::size_t>(in.gcount()));
    }
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

namespace {

Graph parse_line(const std::string& line, std::size_t line_number) {
  try {
    return parse_graph6(line);
  } catch (const ParseError& e) {
    fail(ErrorCode::kParse, "line " + std::to_string(line_number) + ": " + e.what());
  }
}

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::vector<EnumerationSummary> ordered(
    const std::map<int, EnumerationSummary>& by_n) {
  std::vector<EnumerationSummary> out;
  for (const auto& [n, s] : by_n) out.push_back(s);
  return out;
}

void merge_into(std::map<int, EnumerationSummary>& by_n,
                const std::vector<EnumerationSummary>& part) {
  for (const auto& s : part) {
    auto [it, inserted] = by_n.try_emplace(s.n);
    if (inserted) it->second.n = s.n;
    it->second.merge(s);
  }
}

struct ChunkOutcome {
  std::vector<EnumerationSummary> summaries;
  std::string records;
  std::string nwr;
  std::string non_3st;
};

std::string fingerprint(const EnumerateOptions& o) {
  std::ostringstream s;
  s << "repnum=" << o.classify.rep_number << ";k3=" << o.classify.k3
    << ";cap=" << (o.classify.cap ? std::to_string(*o.classify.cap) : "2n")
    << ";nwr_prev=" << (o.nwr_prev ? std::to_string(o.nwr_prev->size()) : "-")
    << ";non_3st_prev="
    << (o.non_3st_prev ? std::to_string(o.non_3st_prev->size()) : "-")
    << ";records=" << o.records.has_value() << ";nwr_out=" << o.nwr_out.has_value()
    << ";non_3st_out=" << o.non_3st_out.has_value();
  return s.str();
}

constexpr const char* kCheckpointFormat = "wordrep-checkpoint/1";

struct CheckpointEntry {
  std::size_t chunk = 0;
  std::uint64_t records_bytes = 0;
  std::uint64_t nwr_bytes = 0;
  std::uint64_t non_3st_bytes = 0;
  std::vector<EnumerationSummary> summaries;
};

// Append-only log: a header line, then one line per completed chunk. Chunks
// complete in index order, so the log is always a prefix of the run.
class Checkpoint {
 public:
  static std::vector<CheckpointEntry> load(const fs::path& path,
                                           const json& header) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kIo, "cannot read checkpoint " + path.string());
    std::string line;
    if (!std::getline(in, line)) {
      fail(ErrorCode::kCheckpointMismatch, "checkpoint " + path.string() + " is empty");
    }
    json stored;
    try {
      stored = json::parse(line);
    } catch (const json::exception&) {
      fail(ErrorCode::kCheckpointMismatch, "checkpoint header is unreadable");
    }
    for (const char* key : {"format", "input_digest", "chunk_size", "options"}) {
      if (!stored.contains(key) || stored.at(key) != header.at(key)) {
        fail(ErrorCode::kCheckpointMismatch,
             std::string("checkpoint does not match this run (") + key +
                 " differs); refusing to resume");
      }
    }
    std::vector<CheckpointEntry> entries;
    std::uint64_t valid_bytes = line.size() + 1;
    while (std::getline(in, line)) {
      if (in.eof()) break;  // unterminated tail from an interrupted write
      try {
        const json j = json::parse(line);
        CheckpointEntry e;
        e.chunk = j.at("chunk").get<std::size_t>();
        e.records_bytes = j.at("records_bytes").get<std::uint64_t>();
        e.nwr_bytes = j.at("nwr_bytes").get<std::uint64_t>();
        e.non_3st_bytes = j.at("non_3st_bytes").get<std::uint64_t>();
        for (const auto& s : j.at("summaries")) {
          e.summaries.push_back(summary_from_json(s.dump()));
        }
        if (e.chunk != entries.size()) break;
        entries.push_back(std::move(e));
        valid_bytes += line.size() + 1;
      } catch (const std::exception&) {
        break;
      }
    }
    in.close();
    fs::resize_file(path, valid_bytes);
    return entries;
  }

  Checkpoint(const fs::path& path, const json& header, bool fresh)
      : out_(path, fresh ? std::ios::trunc : std::ios::app) {
    if (!out_) fail(ErrorCode::kIo, "cannot write checkpoint " + path.string());
    if (fresh) {
      out_ << header.dump() << '\n';
      out_.flush();
    }
  }

  void append(const CheckpointEntry& e) {
    json j = json::object();
    j["chunk"] = e.chunk;
    j["records_bytes"] = e.records_bytes;
    j["nwr_bytes"] = e.nwr_bytes;
    j["non_3st_bytes"] = e.non_3st_bytes;
    json summaries = json::array();
    for (const auto& s : e.summaries) summaries.push_back(json::parse(summary_to_json(s)));
    j["summaries"] = summaries;
    out_ << j.dump() << '\n';
    out_.flush();
    if (!out_) fail(ErrorCode::kIo, "checkpoint write failed");
  }

 private:
  std::ofstream out_;
};

// Output file that may resume at a recorded length.
class Sink {
 public:
  Sink() = default;
  Sink(const std::optional<fs::path>& path, std::uint64_t resume_at, bool resume)
      : enabled_(path.has_value()) {
    if (!enabled_) return;
    if (resume) {
      if (!fs::exists(*path) || fs::file_size(*path) < resume_at) {
        fail(ErrorCode::kCheckpointMismatch,
             path->string() + " is shorter than the checkpoint records");
      }
      fs::resize_file(*path, resume_at);
      out_.open(*path, std::ios::app | std::ios::binary);
    } else {
      out_.open(*path, std::ios::trunc | std::ios::binary);
    }
    if (!out_) fail(ErrorCode::kIo, "cannot write " + path->string());
    bytes_ = resume ? resume_at : 0;
  }

  void write(const std::string& text) {
    if (!enabled_) return;
    out_ << text;
    out_.flush();
    if (!out_) fail(ErrorCode::kIo, "write failed");
    bytes_ += text.size();
  }

  std::uint64_t bytes() const { return bytes_; }

 private:
  bool enabled_ = false;
  std::ofstream out_;
  std::uint64_t bytes_ = 0;
};

ChunkOutcome classify_chunk(const Chunk& chunk, const EnumerateOptions& options) {
  ChunkOutcome outcome;
  std::map<int, EnumerationSummary> by_n;
  for (std::size_t i = 0; i < chunk.lines.size(); ++i) {
    const double start = thread_cpu_seconds();
    const Graph g = parse_line(chunk.lines[i], chunk.line_numbers[i]);
    const ClassificationRecord record = classify(g, options.classify);
    auto [it, inserted] = by_n.try_emplace(record.n);
    EnumerationSummary& s = it->second;
    s.add(record);
    if (options.nwr_prev) {
      if (!s.minimal) s.minimal = 0, s.non_minimal = 0;
      if (!record.representable) {
        ++*(is_minimal(g, *options.nwr_prev) ? s.minimal : s.non_minimal);
      }
    }
    const bool non_3st = record.k3_orientable && !*record.k3_orientable;
    if (options.non_3st_prev && record.k3_orientable) {
      if (!s.minimal_non_3st) s.minimal_non_3st = 0, s.non_minimal_non_3st = 0;
      if (non_3st) {
        ++*(is_minimal(g, *options.non_3st_prev) ? s.minimal_non_3st
                                                 : s.non_minimal_non_3st);
      }
    }
    if (options.records) outcome.records += to_json_line(record) + '\n';
    if (options.nwr_out && !record.representable) {
      outcome.nwr += record.graph6 + '\n';
    }
    if (options.non_3st_out && non_3st) outcome.non_3st += record.graph6 + '\n';
    s.cpu_seconds += thread_cpu_seconds() - start;
  }
  outcome.summaries = ordered(by_n);
  return outcome;
}

}  // namespace

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_line(line, number));
  }
  return out;
}

IsomorphismIndex load_index(std::istream& in) {
  IsomorphismIndex index;
  for (const Graph& g : read_graph6_stream(in)) index.insert(g);
  return index;
}

EnumerationReport enumerate_stream(std::istream& in,
                                   const EnumerateOptions& options,
                                   const std::string& input_digest) {
  require(options.chunk_size >= 1, "chunk size must be positive");
  if (options.classify.k3 == false) {
    require(!options.non_3st_prev && !options.non_3st_out,
            "non-3-semi-transitive outputs need 3-shortcut classification");
  }
  if (options.checkpoint) {
    require(!input_digest.empty(), "checkpointing needs a file input");
  }
  const int jobs = options.jobs > 0 ? options.jobs : default_jobs();

  json header = json::object();
  header["format"] = kCheckpointFormat;
  header["input_digest"] = input_digest;
  header["chunk_size"] = options.chunk_size;
  header["options"] = fingerprint(options);

  std::vector<CheckpointEntry> resumed;
  const bool resuming = options.checkpoint && fs::exists(*options.checkpoint);
  if (resuming) resumed = Checkpoint::load(*options.checkpoint, header);

  const CheckpointEntry tail = resumed.empty() ? CheckpointEntry{} : resumed.back();
  Sink records(options.records, tail.records_bytes, resuming);
  Sink nwr(options.nwr_out, tail.nwr_bytes, resuming);
  Sink non_3st(options.non_3st_out, tail.non_3st_bytes, resuming);
  std::optional<Checkpoint> checkpoint;
  if (options.checkpoint) checkpoint.emplace(*options.checkpoint, header, !resuming);

  EnumerationReport report;
  std::map<int, EnumerationSummary> by_n;
  for (const auto& e : resumed) merge_into(by_n, e.summaries);
  report.resumed_chunks = resumed.size();

  std::size_t fresh = 0;
  ChunkReader reader(in, options.chunk_size);
  report.complete = true;
  internal::run_chunks<ChunkOutcome>(
      reader, jobs,
      [&](std::size_t index) { return index < resumed.size(); },
      [&](const Chunk& chunk) { return classify_chunk(chunk, options); },
      [&](std::size_t index, ChunkOutcome&& outcome) {
        records.write(outcome.records);
        nwr.write(outcome.nwr);
        non_3st.write(outcome.non_3st);
        merge_into(by_n, outcome.summaries);
        if (checkpoint) {
          checkpoint->append(CheckpointEntry{index, records.bytes(), nwr.bytes(),
                                             non_3st.bytes(),
                                             std::move(outcome.summaries)});
        }
        ++fresh;
        if (options.stop_after_chunks && fresh >= *options.stop_after_chunks) {
          report.complete = false;
          return false;
        }
        return true;
      });
  report.chunks = resumed.size() + fresh;
  report.summaries = ordered(by_n);
  return report;
}

EnumerationReport enumerate_file(const fs::path& path,
                                 const EnumerateOptions& options) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  const std::string digest = options.checkpoint ? digest_file(path) : "";
  return enumerate_stream(in, options, digest);
}

bool is_minimal(const Graph& g, const IsomorphismIndex& prev) {
  for (int v = 0; v < g.order(); ++v) {
    if (prev.contains(delete_vertex(g, v))) return false;
  }
  return true;
}

MinimalityResult minimal_nwr(std::span<const Graph> nwr_n,
                             const IsomorphismIndex& nwr_prev) {
  MinimalityResult result;
  for (const Graph& g : nwr_n) {
    if (is_minimal(g, nwr_prev)) {
      result.minimal.push_back(g);
    } else {
      ++result.non_minimal;
    }
  }
  return result;
}

MinimalityReport minimal_stream(std::istream& bad_n,
                                const IsomorphismIndex& bad_prev, int jobs,
                                std::size_t chunk_size,
                                std::ostream* minimal_out) {
  require(chunk_size >= 1, "chunk size must be positive");
  struct Part {
    int n = 0;
    std::int64_t total = 0;
    std::int64_t minimal = 0;
    std::string minimal_g6;
  };
  MinimalityReport report;
  ChunkReader reader(bad_n, chunk_size);
  internal::run_chunks<Part>(
      reader, jobs > 0 ? jobs : default_jobs(),
      [](std::size_t) { return false; },
      [&](const Chunk& chunk) {
        Part part;
        for (std::size_t i = 0; i < chunk.lines.size(); ++i) {
          const Graph g = parse_line(chunk.lines[i], chunk.line_numbers[i]);
          part.n = g.order();
          ++part.total;
          if (is_minimal(g, bad_prev)) {
            ++part.minimal;
            if (minimal_out) part.minimal_g6 += chunk.lines[i] + '\n';
          }
        }
        return part;
      },
      [&](std::size_t, Part&& part) {
        report.n = part.n;
        report.total += part.total;
        report.minimal += part.minimal;
        if (minimal_out) *minimal_out << part.minimal_g6;
        return true;
      });
  report.non_minimal = report.total - report.minimal;
  return report;
}

SeparationResult count_3st_not_st(std::istream& in, int jobs,
                                  std::size_t chunk_size) {
  EnumerateOptions options;
  options.classify.k3 = true;
  options.jobs = jobs;
  options.chunk_size = chunk_size;
  const EnumerationReport report = enumerate_stream(in, options);
  SeparationResult result;
  for (const auto& s : report.summaries) {
    result.graphs.insert(result.graphs.end(), s.separated.begin(), s.separated.end());
    result.total += s.total;
    result.non_3st += s.non_3st.value_or(0);
  }
  result.count = static_cast<std::int64_t>(result.graphs.size());
  return result;
}

}  // namespace wordrep
