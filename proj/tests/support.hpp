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

#ifndef WORDREP_TESTS_SUPPORT_HPP_
#define WORDREP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wordrep/enumeration.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep::testing {

inline std::filesystem::path graphs_file(int n) {
  return std::filesystem::path(WORDREP_DATA_DIR) /
         ("connected_" + std::to_string(n) + ".g6");
}

inline std::vector<Graph> connected_graphs(int n) {
  std::ifstream in(graphs_file(n));
  return read_graph6_stream(in);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Every letter of 0..n-1 appears at least once.
inline Word random_word(std::mt19937& rng, int n, int extra) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) letters.push_back(pick(rng));
  std::shuffle(letters.begin(), letters.end(), rng);
  return Word(n, letters);
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("wordrep-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace wordrep::testing

#endif  // WORDREP_TESTS_SUPPORT_HPP_
