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

#ifndef WORDREP_WORDREP_H_
#define WORDREP_WORDREP_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define WR_API __attribute__((visibility("default")))
#else
#define WR_API
#endif

/* Vertex and letter labels are 1-based throughout this interface. */

typedef enum wr_status {
  WR_OK = 0,
  WR_ERR_USAGE = 2,
  WR_ERR_PARSE = 3,
  WR_ERR_CAP_EXCEEDED = 4,
  WR_ERR_CHECKPOINT = 5,
  WR_ERR_IO = 6,
  WR_ERR_INTERNAL = 7
} wr_status;

typedef enum wr_orientation_mode {
  WR_MODE_SEMI_TRANSITIVE = 0,
  WR_MODE_SHORTCUT_FREE = 1,
  WR_MODE_TRANSITIVE = 2
} wr_orientation_mode;

typedef struct wr_graph wr_graph;
typedef struct wr_word wr_word;
typedef struct wr_orientation wr_orientation;

/* Message for the last failed call on this thread; empty after success. */
WR_API const char* wr_last_error(void);
/* Releases strings returned through char** out-parameters. */
WR_API void wr_string_free(char* s);
WR_API const char* wr_version(void);

/* Graphs */
WR_API wr_status wr_graph_new(int n, wr_graph** out);
WR_API void wr_graph_free(wr_graph* g);
WR_API wr_status wr_graph_clone(const wr_graph* g, wr_graph** out);
WR_API int wr_graph_order(const wr_graph* g);
WR_API int wr_graph_size(const wr_graph* g);
WR_API wr_status wr_graph_add_edge(wr_graph* g, int u, int v);
WR_API wr_status wr_graph_has_edge(const wr_graph* g, int u, int v, int* out);
WR_API wr_status wr_graph_from_graph6(const char* text, wr_graph** out);
WR_API wr_status wr_graph_to_graph6(const wr_graph* g, char** out);
/* Edge list "1-2,1-3,..." for human inspection. */
WR_API wr_status wr_graph_edge_list(const wr_graph* g, char** out);
WR_API wr_status wr_graph_generate(const char* family, int size, wr_graph** out);
/* Comma-separated family names accepted by wr_graph_generate. */
WR_API wr_status wr_family_names(char** out);
WR_API wr_status wr_graph_delete_vertex(const wr_graph* g, int v, wr_graph** out);
WR_API wr_status wr_graph_is_connected(const wr_graph* g, int* out);
WR_API wr_status wr_graphs_isomorphic(const wr_graph* a, const wr_graph* b,
                                      int* out);

/* Words. alphabet 0 means the largest letter present. */
WR_API wr_status wr_word_parse(const char* text, int alphabet, wr_word** out);
WR_API void wr_word_free(wr_word* w);
WR_API wr_status wr_word_format(const wr_word* w, char** out);
WR_API size_t wr_word_length(const wr_word* w);
WR_API int wr_word_alphabet(const wr_word* w);
WR_API int wr_word_letter(const wr_word* w, size_t index);
WR_API wr_status wr_word_alternate(const wr_word* w, int x, int y, int* out);
WR_API wr_status wr_word_verify(const wr_word* w, const wr_graph* g, int* out);
WR_API wr_status wr_word_is_uniform(const wr_word* w, int k, int* out);
WR_API wr_status wr_word_graph(const wr_word* w, wr_graph** out);

/* Orientations. Arc lists read and print as "1->2,1->3,...". */
WR_API void wr_orientation_free(wr_orientation* o);
WR_API wr_status wr_orientation_parse(const wr_graph* g, const char* arcs,
                                      wr_orientation** out);
WR_API wr_status wr_orientation_format(const wr_orientation* o, char** out);
WR_API wr_status wr_orientation_is_acyclic(const wr_orientation* o, int* out);
/* length 0 means any length; *out is NULL when no shortcut exists,
   otherwise the path "1->3->4->2" followed by " missing 1->4". */
WR_API wr_status wr_orientation_find_shortcut(const wr_orientation* o, int length,
                                              char** out);
WR_API wr_status wr_orientation_is_semi_transitive(const wr_orientation* o,
                                                   int* out);
WR_API wr_status wr_orientation_is_transitive(const wr_orientation* o, int* out);
/* *out is NULL when the graph has no orientation of the requested kind.
   length is the shortcut length for WR_MODE_SHORTCUT_FREE (>= 3). */
WR_API wr_status wr_find_orientation(const wr_graph* g, wr_orientation_mode mode,
                                     int length, wr_orientation** out);
WR_API wr_status wr_is_word_representable(const wr_graph* g, int* out);

/* Uniform words. */
/* cap 0 selects 2n. *k is 0 for infinity; *witness may be NULL. */
WR_API wr_status wr_representation_number(const wr_graph* g, int cap, int* k,
                                          wr_word** witness);
WR_API wr_status wr_find_uniform_word(const wr_graph* g, int k, wr_word** out);
WR_API wr_status wr_find_permutational_word(const wr_graph* g, int k,
                                            wr_word** out);

/* Classification and batch runs. Results are JSON text. */
typedef struct wr_classify_options {
  int rep_number;
  int k3;
  int cap; /* 0: 2n */
} wr_classify_options;

WR_API wr_status wr_classify(const wr_graph* g, const wr_classify_options* options,
                             char** json_line);

typedef struct wr_enumerate_options {
  wr_classify_options classify;
  int jobs;          /* 0: WORDREP_JOBS or hardware threads */
  size_t chunk_size; /* 0: 1000 */
  const char* checkpoint;
  const char* records;
  const char* summary_csv;
  const char* nwr_out;
  const char* non_3st_out;
  const char* nwr_prev;
  const char* non_3st_prev;
  size_t stop_after_chunks; /* 0: run to completion */
} wr_enumerate_options;

WR_API void wr_enumerate_options_init(wr_enumerate_options* options);
/* input NULL reads standard input. The report holds "complete", "chunks",
   "resumed_chunks" and per-order "summaries". */
WR_API wr_status wr_enumerate(const char* input,
                              const wr_enumerate_options* options,
                              char** report_json);
/* Splits the bad graphs of one order into minimal and non-minimal against the
   bad graphs one vertex smaller. */
WR_API wr_status wr_minimal(const char* input, const char* prev, int jobs,
                            size_t chunk_size, const char* minimal_out,
                            char** report_json);
/* Graphs with a 3-shortcut-free orientation but no semi-transitive one. */
WR_API wr_status wr_separate_3st(const char* input, int jobs, size_t chunk_size,
                                 char** report_json);

#ifdef __cplusplus
}
#endif

#endif  // WORDREP_WORDREP_H_
