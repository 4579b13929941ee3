// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace risvc {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_block(std::size_t n_blocks, unsigned workers,
                    const std::function<void(std::size_t)>& body) {
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), n_blocks));
  if (n_threads <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (true) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        body(b);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_blocks);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(run);
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

}  // namespace risvc
