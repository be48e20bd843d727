// Copyright 2026 The Synest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNEST_THREADING_HPP
#define SYNEST_THREADING_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace synest {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Tasks may only write to caller-owned,
// index-addressed slots; callers reduce those slots in fixed index order
// afterwards, which keeps every result independent of the worker count.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> threads;
  threads.reserve(nw);
  std::vector<std::exception_ptr> errors(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    threads.emplace_back([&, w]() {
      try {
        // Static block partition; task i belongs to exactly one worker.
        std::size_t lo = n * w / nw;
        std::size_t hi = n * (w + 1) / nw;
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace synest

#endif  // SYNEST_THREADING_HPP
