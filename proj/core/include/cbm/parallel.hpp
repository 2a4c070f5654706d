// Copyright 2026 The conformal_bm Authors.
//
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

#ifndef CBM_PARALLEL_HPP_
#define CBM_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cbm {

// Paths per work unit. Fixed so that the reduction tree, and hence every
// floating-point result, is independent of the worker count.
inline constexpr std::size_t kPathsPerBlock = 1024;

/// Runs `block(begin, end)` over consecutive index ranges of at most
/// kPathsPerBlock items on `workers` threads, then folds the per-block results
/// with `merge(left, right)` pairwise in block order.
template <class Acc, class BlockFn, class MergeFn>
Acc deterministic_reduce(std::size_t n_items, unsigned workers, BlockFn&& block, MergeFn&& merge) {
  const std::size_t n_blocks = (n_items + kPathsPerBlock - 1) / kPathsPerBlock;
  std::vector<Acc> parts(n_blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) {
      try {
        const std::size_t begin = b * kPathsPerBlock;
        parts[b] = block(begin, std::min(n_items, begin + kPathsPerBlock));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_blocks);
      }
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n_blocks, 1)));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  if (parts.empty()) return Acc{};

  // Pairwise tree: combine neighbours until one remains.
  for (std::size_t stride = 1; stride < parts.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < parts.size(); i += 2 * stride) {
      merge(parts[i], parts[i + stride]);
    }
  }
  return std::move(parts.front());
}

}  // namespace cbm

#endif  // CBM_PARALLEL_HPP_
