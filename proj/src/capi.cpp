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

#include "wordrep/wordrep.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wordrep/classify.hpp"
#include "wordrep/enumeration.hpp"
#include "wordrep/error.hpp"
#include "wordrep/generators.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/isomorphism.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/orientation_search.hpp"
#include "wordrep/uniform.hpp"
#include "wordrep/word.hpp"

struct wr_graph {
  wordrep::Graph value;
};
struct wr_word {
  wordrep::Word value;
};
struct wr_orientation {
  wordrep::Orientation value;
};

namespace {

using namespace wordrep;
using nlohmann::json;

thread_local std::string last_error;

wr_status status_of(ErrorCode code) { return static_cast<wr_status>(code); }

// Runs body, translating exceptions into status codes and the thread's
// last-error message.
template <typename Body>
wr_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return WR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WR_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kUsage, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int vertex_index(const Graph& g, int label) {
  if (label < 1 || label > g.order()) {
    fail(ErrorCode::kUsage, "vertex " + std::to_string(label) +
                                " out of range 1.." + std::to_string(g.order()));
  }
  return label - 1;
}

std::optional<std::filesystem::path> path_or_none(const char* p) {
  if (!p || !*p) return std::nullopt;
  return std::filesystem::path(p);
}

std::shared_ptr<const IsomorphismIndex> load_index_file(const char* path) {
  if (!path || !*path) return nullptr;
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, std::string("cannot open ") + path);
  return std::make_shared<IsomorphismIndex>(load_index(in));
}

ClassifyOptions convert(const wr_classify_options* o) {
  ClassifyOptions out;
  if (!o) return out;
  out.rep_number = o->rep_number != 0;
  out.k3 = o->k3 != 0;
  if (o->cap < 0) fail(ErrorCode::kUsage, "cap must be positive");
  if (o->cap > 0) out.cap = o->cap;
  return out;
}

json summaries_json(const std::vector<EnumerationSummary>& summaries) {
  json out = json::array();
  for (const auto& s : summaries) out.push_back(json::parse(summary_to_json(s)));
  return out;
}

}  // namespace

extern "C" {

const char* wr_last_error(void) { return last_error.c_str(); }

void wr_string_free(char* s) { std::free(s); }

const char* wr_version(void) { return "1.0.0"; }

wr_status wr_graph_new(int n, wr_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new wr_graph{Graph(n)};
  });
}

void wr_graph_free(wr_graph* g) { delete g; }

wr_status wr_graph_clone(const wr_graph* g, wr_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new wr_graph{g->value};
  });
}

int wr_graph_order(const wr_graph* g) { return g ? g->value.order() : 0; }

int wr_graph_size(const wr_graph* g) { return g ? g->value.size() : 0; }

wr_status wr_graph_add_edge(wr_graph* g, int u, int v) {
  return guarded([&] {
    need(g, "graph");
    g->value.add_edge(vertex_index(g->value, u), vertex_index(g->value, v));
  });
}

wr_status wr_graph_has_edge(const wr_graph* g, int u, int v, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->value.has_edge(vertex_index(g->value, u), vertex_index(g->value, v));
  });
}

wr_status wr_graph_from_graph6(const char* text, wr_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new wr_graph{parse_graph6(text)};
  });
}

wr_status wr_graph_to_graph6(const wr_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(encode_graph6(g->value));
  });
}

wr_status wr_graph_edge_list(const wr_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(edge_list_string(g->value));
  });
}

wr_status wr_graph_generate(const char* family, int size, wr_graph** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    *out = new wr_graph{generate(parse_family(family), size)};
  });
}

wr_status wr_family_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string names;
    for (auto name : family_names()) {
      if (!names.empty()) names += ',';
      names += name;
    }
    *out = dup_string(names);
  });
}

wr_status wr_graph_delete_vertex(const wr_graph* g, int v, wr_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new wr_graph{delete_vertex(g->value, vertex_index(g->value, v))};
  });
}

wr_status wr_graph_is_connected(const wr_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = is_connected(g->value);
  });
}

wr_status wr_graphs_isomorphic(const wr_graph* a, const wr_graph* b, int* out) {
  return guarded([&] {
    need(a, "graph");
    need(b, "graph");
    need(out, "out");
    *out = are_isomorphic(a->value, b->value);
  });
}

wr_status wr_word_parse(const char* text, int alphabet, wr_word** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new wr_word{parse_word(text, alphabet)};
  });
}

void wr_word_free(wr_word* w) { delete w; }

wr_status wr_word_format(const wr_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = dup_string(format_word(w->value));
  });
}

size_t wr_word_length(const wr_word* w) { return w ? w->value.length() : 0; }

int wr_word_alphabet(const wr_word* w) { return w ? w->value.alphabet_size() : 0; }

int wr_word_letter(const wr_word* w, size_t index) {
  if (!w || index >= w->value.length()) return 0;
  return w->value[index] + 1;
}

wr_status wr_word_alternate(const wr_word* w, int x, int y, int* out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = alternate_in_word(w->value, x - 1, y - 1);
  });
}

wr_status wr_word_verify(const wr_word* w, const wr_graph* g, int* out) {
  return guarded([&] {
    need(w, "word");
    need(g, "graph");
    need(out, "out");
    *out = verify_representation(w->value, g->value);
  });
}

wr_status wr_word_is_uniform(const wr_word* w, int k, int* out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = is_k_uniform(w->value, k);
  });
}

wr_status wr_word_graph(const wr_word* w, wr_graph** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = new wr_graph{graph_of_word(w->value)};
  });
}

void wr_orientation_free(wr_orientation* o) { delete o; }

wr_status wr_orientation_parse(const wr_graph* g, const char* arcs,
                               wr_orientation** out) {
  return guarded([&] {
    need(g, "graph");
    need(arcs, "arcs");
    need(out, "out");
    *out = new wr_orientation{parse_arcs(g->value, arcs)};
  });
}

wr_status wr_orientation_format(const wr_orientation* o, char** out) {
  return guarded([&] {
    need(o, "orientation");
    need(out, "out");
    *out = dup_string(format_arcs(o->value));
  });
}

wr_status wr_orientation_is_acyclic(const wr_orientation* o, int* out) {
  return guarded([&] {
    need(o, "orientation");
    need(out, "out");
    *out = is_acyclic(o->value);
  });
}

wr_status wr_orientation_find_shortcut(const wr_orientation* o, int length,
                                       char** out) {
  return guarded([&] {
    need(o, "orientation");
    need(out, "out");
    *out = nullptr;
    const auto witness =
        find_shortcut(o->value, length == 0 ? std::nullopt : std::optional<int>(length));
    if (!witness) return;
    std::string text;
    for (int v : witness->path) {
      if (!text.empty()) text += "->";
      text += std::to_string(v + 1);
    }
    text += " missing " + std::to_string(witness->missing.first + 1) + "->" +
            std::to_string(witness->missing.second + 1);
    *out = dup_string(text);
  });
}

wr_status wr_orientation_is_semi_transitive(const wr_orientation* o, int* out) {
  return guarded([&] {
    need(o, "orientation");
    need(out, "out");
    *out = is_semi_transitive_orientation(o->value);
  });
}

wr_status wr_orientation_is_transitive(const wr_orientation* o, int* out) {
  return guarded([&] {
    need(o, "orientation");
    need(out, "out");
    *out = is_transitive_orientation(o->value);
  });
}

wr_status wr_find_orientation(const wr_graph* g, wr_orientation_mode mode,
                              int length, wr_orientation** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = nullptr;
    std::optional<Orientation> found;
    switch (mode) {
      case WR_MODE_SEMI_TRANSITIVE:
        found = find_semi_transitive_orientation(g->value);
        break;
      case WR_MODE_SHORTCUT_FREE:
        found = find_k_shortcut_free_orientation(g->value, length);
        break;
      case WR_MODE_TRANSITIVE:
        found = find_transitive_orientation(g->value);
        break;
      default:
        fail(ErrorCode::kUsage, "unknown orientation mode");
    }
    if (found) *out = new wr_orientation{std::move(*found)};
  });
}

wr_status wr_is_word_representable(const wr_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = is_word_representable(g->value);
  });
}

wr_status wr_representation_number(const wr_graph* g, int cap, int* k,
                                   wr_word** witness) {
  return guarded([&] {
    need(g, "graph");
    need(k, "k");
    if (witness) *witness = nullptr;
    if (cap < 0) fail(ErrorCode::kUsage, "cap must be positive");
    const Representation r = representation_number(
        g->value, cap == 0 ? std::nullopt : std::optional<int>(cap));
    *k = r.number.is_infinite() ? 0 : r.number.value();
    if (witness && r.witness) *witness = new wr_word{*r.witness};
  });
}

wr_status wr_find_uniform_word(const wr_graph* g, int k, wr_word** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = nullptr;
    if (auto w = find_k_uniform_representant(g->value, k)) {
      *out = new wr_word{std::move(*w)};
    }
  });
}

wr_status wr_find_permutational_word(const wr_graph* g, int k, wr_word** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = nullptr;
    if (auto w = find_permutational_representant(g->value, k)) {
      *out = new wr_word{std::move(*w)};
    }
  });
}

wr_status wr_classify(const wr_graph* g, const wr_classify_options* options,
                      char** json_line) {
  return guarded([&] {
    need(g, "graph");
    need(json_line, "out");
    *json_line = dup_string(to_json_line(classify(g->value, convert(options))));
  });
}

void wr_enumerate_options_init(wr_enumerate_options* options) {
  if (options) *options = wr_enumerate_options{};
}

wr_status wr_enumerate(const char* input, const wr_enumerate_options* options,
                       char** report_json) {
  return guarded([&] {
    need(options, "options");
    need(report_json, "out");
    EnumerateOptions o;
    o.classify = convert(&options->classify);
    o.jobs = options->jobs;
    if (options->chunk_size > 0) o.chunk_size = options->chunk_size;
    o.checkpoint = path_or_none(options->checkpoint);
    o.records = path_or_none(options->records);
    o.nwr_out = path_or_none(options->nwr_out);
    o.non_3st_out = path_or_none(options->non_3st_out);
    if (options->stop_after_chunks > 0) o.stop_after_chunks = options->stop_after_chunks;
    o.nwr_prev = load_index_file(options->nwr_prev);
    o.non_3st_prev = load_index_file(options->non_3st_prev);

    EnumerationReport report;
    if (input && *input) {
      report = enumerate_file(input, o);
    } else {
      report = enumerate_stream(std::cin, o);
    }
    if (options->summary_csv && *options->summary_csv) {
      std::ofstream csv(options->summary_csv);
      if (!csv) fail(ErrorCode::kIo, std::string("cannot write ") + options->summary_csv);
      write_summary_csv(csv, report.summaries);
      if (!csv.flush()) fail(ErrorCode::kIo, "summary write failed");
    }
    json out = json::object();
    out["complete"] = report.complete;
    out["chunks"] = report.chunks;
    out["resumed_chunks"] = report.resumed_chunks;
    out["summaries"] = summaries_json(report.summaries);
    *report_json = dup_string(out.dump());
  });
}

wr_status wr_minimal(const char* input, const char* prev, int jobs,
                     size_t chunk_size, const char* minimal_out,
                     char** report_json) {
  return guarded([&] {
    need(prev, "prev");
    need(report_json, "out");
    const auto index = load_index_file(prev);
    std::ofstream out_file;
    if (minimal_out && *minimal_out) {
      out_file.open(minimal_out);
      if (!out_file) fail(ErrorCode::kIo, std::string("cannot write ") + minimal_out);
    }
    std::ifstream in_file;
    if (input && *input) {
      in_file.open(input);
      if (!in_file) fail(ErrorCode::kIo, std::string("cannot open ") + input);
    }
    std::istream& in = (input && *input) ? static_cast<std::istream&>(in_file) : std::cin;
    const MinimalityReport report =
        minimal_stream(in, index ? *index : IsomorphismIndex{}, jobs,
                       chunk_size == 0 ? 1000 : chunk_size,
                       out_file.is_open() ? &out_file : nullptr);
    if (out_file.is_open() && !out_file.flush()) fail(ErrorCode::kIo, "write failed");
    json out = json::object();
    out["n"] = report.n;
    out["total"] = report.total;
    out["minimal"] = report.minimal;
    out["non_minimal"] = report.non_minimal;
    *report_json = dup_string(out.dump());
  });
}

wr_status wr_separate_3st(const char* input, int jobs, size_t chunk_size,
                          char** report_json) {
  return guarded([&] {
    need(report_json, "out");
    std::ifstream in_file;
    if (input && *input) {
      in_file.open(input);
      if (!in_file) fail(ErrorCode::kIo, std::string("cannot open ") + input);
    }
    std::istream& in = (input && *input) ? static_cast<std::istream&>(in_file) : std::cin;
    const SeparationResult r =
        count_3st_not_st(in, jobs, chunk_size == 0 ? 1000 : chunk_size);
    json out = json::object();
    out["count"] = r.count;
    out["total"] = r.total;
    out["non_3st"] = r.non_3st;
    out["graphs"] = r.graphs;
    *report_json = dup_string(out.dump());
  });
}

}  // extern "C"
