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

#ifndef WORDREP_SRC_CHUNK_POOL_HPP_
#define WORDREP_SRC_CHUNK_POOL_HPP_

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace wordrep::internal {

struct Chunk {
  std::size_t index = 0;
  std::size_t first_line = 1;  // 1-based line number of lines[0]
  std::vector<std::string> lines;
  std::vector<std::size_t> line_numbers;
};

// Splits a line stream into chunks of `size` non-empty lines.
class ChunkReader {
 public:
  ChunkReader(std::istream& in, std::size_t size) : in_(in), size_(size) {}

  std::optional<Chunk> next() {
    Chunk chunk;
    chunk.index = index_;
    std::string line;
    while (chunk.lines.size() < size_ && std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      chunk.lines.push_back(std::move(line));
      chunk.line_numbers.push_back(line_);
    }
    if (chunk.lines.empty()) return std::nullopt;
    chunk.first_line = chunk.line_numbers.front();
    ++index_;
    return chunk;
  }

 private:
  std::istream& in_;
  std::size_t size_;
  std::size_t index_ = 0;
  std::size_t line_ = 0;
};

// Runs `work` on chunks across `jobs` threads and hands results to
// `deliver` strictly in chunk order, on the calling thread. Chunks for which
// `skip` holds are read but not processed. `deliver` returns false to stop
// early. The first failure in chunk order is rethrown.
template <typename Result>
void run_chunks(ChunkReader& reader, int jobs,
                const std::function<bool(std::size_t)>& skip,
                const std::function<Result(const Chunk&)>& work,
                const std::function<bool(std::size_t, Result&&)>& deliver) {
  struct Outcome {
    std::optional<Result> value;
    std::exception_ptr error;
  };
  std::mutex mutex;
  std::condition_variable task_ready;
  std::condition_variable result_ready;
  std::deque<Chunk> tasks;
  std::map<std::size_t, Outcome> done;
  bool stop = false;
  bool no_more = false;

  auto worker = [&] {
    for (;;) {
      Chunk chunk;
      {
        std::unique_lock lock(mutex);
        task_ready.wait(lock, [&] { return stop || no_more || !tasks.empty(); });
        if (stop || tasks.empty()) return;
        chunk = std::move(tasks.front());
        tasks.pop_front();
      }
      Outcome outcome;
      try {
        outcome.value.emplace(work(chunk));
      } catch (...) {
        outcome.error = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        done.emplace(chunk.index, std::move(outcome));
      }
      result_ready.notify_all();
    }
  };

  const int threads = jobs < 1 ? 1 : jobs;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  auto shutdown = [&] {
    {
      std::lock_guard lock(mutex);
      stop = true;
    }
    task_ready.notify_all();
    for (auto& t : pool) t.join();
  };

  std::exception_ptr failure;
  try {
    std::set<std::size_t> skipped;
    std::size_t next = 0;
    std::size_t in_flight = 0;
    bool eof = false;
    const std::size_t window = 2 * static_cast<std::size_t>(threads);
    for (;;) {
      while (!eof && in_flight < window) {
        auto chunk = reader.next();
        if (!chunk) {
          eof = true;
          {
            std::lock_guard lock(mutex);
            no_more = true;
          }
          task_ready.notify_all();
          break;
        }
        if (skip(chunk->index)) {
          skipped.insert(chunk->index);
          continue;
        }
        {
          std::lock_guard lock(mutex);
          tasks.push_back(std::move(*chunk));
        }
        ++in_flight;
        task_ready.notify_one();
      }

      bool progressed = false;
      for (;;) {
        if (skipped.erase(next)) {
          ++next;
          progressed = true;
          continue;
        }
        Outcome outcome;
        {
          std::lock_guard lock(mutex);
          auto it = done.find(next);
          if (it == done.end()) break;
          outcome = std::move(it->second);
          done.erase(it);
        }
        --in_flight;
        progressed = true;
        if (outcome.error) std::rethrow_exception(outcome.error);
        const std::size_t index = next++;
        if (!deliver(index, std::move(*outcome.value))) {
          shutdown();
          return;
        }
      }
      if (eof && in_flight == 0 && skipped.empty()) break;
      if (!progressed && in_flight > 0) {
        std::unique_lock lock(mutex);
        result_ready.wait(lock, [&] { return done.count(next) > 0; });
      }
    }
  } catch (...) {
    failure = std::current_exception();
  }
  shutdown();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wordrep::internal

#endif  // WORDREP_SRC_CHUNK_POOL_HPP_
