// include/embedsep/parallel.hpp

// Copyright 2026  The embedsep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMBEDSEP_PARALLEL_HPP_
#define EMBEDSEP_PARALLEL_HPP_

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "embedsep/types.hpp"

namespace embedsep {

inline Index resolve_threads(Index requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<Index>(hw);
}

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// write results into per-index slots, so the outcome is identical for any
// thread count. The first exception thrown by a worker is rethrown.
inline void parallel_for(Index n, Index threads, const std::function<void(Index)>& fn) {
  threads = std::min(resolve_threads(threads), n);
  if (threads <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;

  auto work = [&] {
    for (;;) {
      const Index i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (Index t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace embedsep

#endif  // EMBEDSEP_PARALLEL_HPP_
