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

// Command-line front end. Talks to the library only through wordrep.h.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wordrep/wordrep.h"

namespace {

// Failure already reported by the library; carries its status.
struct Failure {
  wr_status status;
  std::string message;
};

void check(wr_status status, const std::string& context = "") {
  if (status == WR_OK) return;
  std::string message = wr_last_error();
  if (!context.empty()) message = context + ": " + message;
  throw Failure{status, message};
}

struct GraphDeleter {
  void operator()(wr_graph* g) const { wr_graph_free(g); }
};
struct WordDeleter {
  void operator()(wr_word* w) const { wr_word_free(w); }
};
struct OrientationDeleter {
  void operator()(wr_orientation* o) const { wr_orientation_free(o); }
};
using GraphPtr = std::unique_ptr<wr_graph, GraphDeleter>;
using WordPtr = std::unique_ptr<wr_word, WordDeleter>;
using OrientationPtr = std::unique_ptr<wr_orientation, OrientationDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  wr_string_free(s);
  return out;
}

GraphPtr parse_graph(const std::string& text, const std::string& context = "") {
  wr_graph* g = nullptr;
  check(wr_graph_from_graph6(text.c_str(), &g), context);
  return GraphPtr(g);
}

std::string word_text(const wr_word* w) {
  char* s = nullptr;
  check(wr_word_format(w, &s));
  return take(s);
}

std::string arcs_text(const wr_orientation* o) {
  char* s = nullptr;
  check(wr_orientation_format(o, &s));
  return take(s);
}

// Calls body for each non-empty graph6 line of the input file or stdin.
void for_each_graph(const std::string& input,
                    const std::function<void(const wr_graph*)>& body) {
  std::ifstream file;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw Failure{WR_ERR_IO, "cannot open " + input};
  }
  std::istream& in = file.is_open() ? file : std::cin;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    GraphPtr g = parse_graph(line, "line " + std::to_string(number));
    body(g.get());
    std::cout.flush();
  }
}

const char* optional_path(const std::string& s) {
  return s.empty() ? nullptr : s.c_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-representable graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wr_version()));

  std::string input;
  int cap = 0;
  int k = 0;
  int jobs = 0;
  std::size_t chunk = 1000;
  bool permutational = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "graph6 file (default: standard input)");
  };
  auto add_parallel = [&](CLI::App* cmd) {
    cmd->add_option("--jobs,-j", jobs, "worker threads (default: WORDREP_JOBS or all cores)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--chunk", chunk, "graphs per work unit")->check(CLI::PositiveNumber);
  };

  auto* check_cmd = app.add_subcommand(
      "check", "word-representability with a semi-transitive orientation as witness");
  add_input(check_cmd);

  auto* repnum_cmd = app.add_subcommand(
      "repnum", "representation number with a uniform witness word");
  add_input(repnum_cmd);
  repnum_cmd->add_option("--cap", cap, "largest multiplicity tried (default 2n)")
      ->check(CLI::PositiveNumber);
  repnum_cmd->add_option("--k", k, "only search for a k-uniform word")
      ->check(CLI::PositiveNumber);
  repnum_cmd->add_flag("--permutational", permutational,
                       "with --k: require a concatenation of k permutations");

  std::string graph_text;
  std::string word;
  auto* verify_cmd = app.add_subcommand("verify-word", "does a word represent a graph");
  verify_cmd->add_option("--graph,-g", graph_text, "graph6 (default: first input line)");
  verify_cmd->add_option("--word,-w", word, "word, digits or space separated")->required();
  add_input(verify_cmd);

  std::string mode = "st";
  int length = 3;
  auto* orient_cmd = app.add_subcommand("orient", "find an orientation of the given kind");
  add_input(orient_cmd);
  orient_cmd->add_option("--mode", mode, "st, 3st or transitive")
      ->check(CLI::IsMember({"st", "3st", "transitive"}));
  orient_cmd->add_option("--k", length, "shortcut length for --mode 3st")
      ->check(CLI::Range(3, 62));

  bool want_repnum = false;
  bool want_k3 = false;
  auto add_classify = [&](CLI::App* cmd) {
    cmd->add_flag("--repnum", want_repnum, "compute representation numbers");
    cmd->add_flag("--k3", want_k3, "decide 3-shortcut-free orientability");
    cmd->add_option("--cap", cap, "largest multiplicity tried (default 2n)")
        ->check(CLI::PositiveNumber);
  };
  auto* classify_cmd = app.add_subcommand("classify", "one JSON record per input graph");
  add_input(classify_cmd);
  add_classify(classify_cmd);

  std::string checkpoint, records, summary, nwr_out, non_3st_out, nwr_prev,
      non_3st_prev;
  std::size_t stop_after = 0;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "classify a graph6 stream and summarize by order");
  add_input(enumerate_cmd);
  add_classify(enumerate_cmd);
  add_parallel(enumerate_cmd);
  enumerate_cmd->add_option("--checkpoint", checkpoint, "resumable progress log");
  enumerate_cmd->add_option("--records", records, "JSON-lines output, one per graph");
  enumerate_cmd->add_option("--summary", summary, "CSV summary output");
  enumerate_cmd->add_option("--nwr-out", nwr_out, "write non-representable graphs");
  enumerate_cmd->add_option("--non-3st-out", non_3st_out,
                            "write graphs without a 3-shortcut-free orientation");
  enumerate_cmd->add_option("--nwr-prev", nwr_prev,
                            "non-representable graphs one vertex smaller (counts minimal ones)");
  enumerate_cmd->add_option("--non-3st-prev", non_3st_prev,
                            "non-3-semi-transitive graphs one vertex smaller");
  enumerate_cmd->add_option("--stop-after-chunks", stop_after)->group("");

  std::string prev, minimal_out;
  auto* minimal_cmd = app.add_subcommand(
      "minimal", "split bad graphs into minimal and non-minimal ones");
  add_input(minimal_cmd);
  add_parallel(minimal_cmd);
  minimal_cmd->add_option("--prev", prev, "bad graphs one vertex smaller")->required();
  minimal_cmd->add_option("--output,-o", minimal_out, "write the minimal graphs");

  std::string family;
  int size = 0;
  bool edges = false;
  auto* generate_cmd = app.add_subcommand("generate", "print a named graph in graph6");
  generate_cmd->add_option("family", family, "graph family")->required();
  generate_cmd->add_option("size", size, "family parameter");
  generate_cmd->add_flag("--edges", edges, "print an edge list instead");

  auto* separate_cmd = app.add_subcommand(
      "separate-3st", "graphs that are 3-semi-transitive but not word-representable");
  add_input(separate_cmd);
  add_parallel(separate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : WR_ERR_USAGE;
  }

  try {
    if (*check_cmd) {
      for_each_graph(input, [](const wr_graph* g) {
        wr_orientation* o = nullptr;
        check(wr_find_orientation(g, WR_MODE_SEMI_TRANSITIVE, 0, &o));
        OrientationPtr owned(o);
        if (owned) {
          std::cout << "representable " << arcs_text(owned.get()) << '\n';
        } else {
          std::cout << "non-representable\n";
        }
      });
    } else if (*repnum_cmd) {
      if (permutational && k == 0) throw Failure{WR_ERR_USAGE, "--permutational needs --k"};
      for_each_graph(input, [&](const wr_graph* g) {
        wr_word* w = nullptr;
        if (k > 0) {
          check(permutational ? wr_find_permutational_word(g, k, &w)
                              : wr_find_uniform_word(g, k, &w));
          WordPtr owned(w);
          std::cout << (owned ? word_text(owned.get()) : "none") << '\n';
          return;
        }
        int number = 0;
        check(wr_representation_number(g, cap, &number, &w));
        WordPtr owned(w);
        if (number == 0) {
          std::cout << "infinity\n";
        } else {
          std::cout << number << ' ' << word_text(owned.get()) << '\n';
        }
      });
    } else if (*verify_cmd) {
      wr_word* w = nullptr;
      check(wr_word_parse(word.c_str(), 0, &w), "word");
      WordPtr owned(w);
      auto verify = [&](const wr_graph* g) {
        int valid = 0;
        check(wr_word_verify(owned.get(), g, &valid));
        std::cout << (valid ? "valid" : "invalid") << '\n';
      };
      if (!graph_text.empty()) {
        GraphPtr g = parse_graph(graph_text, "graph");
        verify(g.get());
      } else {
        for_each_graph(input, verify);
      }
    } else if (*orient_cmd) {
      const wr_orientation_mode m = mode == "st"    ? WR_MODE_SEMI_TRANSITIVE
                                    : mode == "3st" ? WR_MODE_SHORTCUT_FREE
                                                    : WR_MODE_TRANSITIVE;
      for_each_graph(input, [&](const wr_graph* g) {
        wr_orientation* o = nullptr;
        check(wr_find_orientation(g, m, length, &o));
        OrientationPtr owned(o);
        std::cout << (owned ? arcs_text(owned.get()) : "none") << '\n';
      });
    } else if (*classify_cmd) {
      const wr_classify_options options{want_repnum, want_k3, cap};
      for_each_graph(input, [&](const wr_graph* g) {
        char* line = nullptr;
        check(wr_classify(g, &options, &line));
        std::cout << take(line) << '\n';
      });
    } else if (*enumerate_cmd) {
      wr_enumerate_options options;
      wr_enumerate_options_init(&options);
      options.classify = {want_repnum, want_k3, cap};
      options.jobs = jobs;
      options.chunk_size = chunk;
      options.checkpoint = optional_path(checkpoint);
      options.records = optional_path(records);
      options.summary_csv = optional_path(summary);
      options.nwr_out = optional_path(nwr_out);
      options.non_3st_out = optional_path(non_3st_out);
      options.nwr_prev = optional_path(nwr_prev);
      options.non_3st_prev = optional_path(non_3st_prev);
      options.stop_after_chunks = stop_after;
      char* report = nullptr;
      check(wr_enumerate(input == "-" ? nullptr : optional_path(input), &options, &report));
      std::cout << take(report) << '\n';
    } else if (*minimal_cmd) {
      char* report = nullptr;
      check(wr_minimal(input == "-" ? nullptr : optional_path(input), prev.c_str(), jobs,
                       chunk, optional_path(minimal_out), &report));
      std::cout << take(report) << '\n';
    } else if (*generate_cmd) {
      wr_graph* g = nullptr;
      check(wr_graph_generate(family.c_str(), size, &g));
      GraphPtr owned(g);
      char* text = nullptr;
      check(edges ? wr_graph_edge_list(g, &text) : wr_graph_to_graph6(g, &text));
      std::cout << take(text) << '\n';
    } else if (*separate_cmd) {
      char* report = nullptr;
      check(wr_separate_3st(input == "-" ? nullptr : optional_path(input), jobs, chunk,
                            &report));
      std::cout << take(report) << '\n';
    }
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "wordrep: " << f.message << '\n';
    return f.status;
  }
  std::cout.flush();
  if (!std::cout) {
    std::cerr << "wordrep: write to standard output failed\n";
    return WR_ERR_IO;
  }
  return 0;
}
