#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hmc {

inline unsigned default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs fn(index_lo, index_hi) over fixed-size blocks of [0, n_items).
// Block boundaries depend only on n_items and block_size, never on the
// worker count, and callers write results into per-index slots, so the
// output is bit-identical for any number of workers.
inline void parallel_blocks(std::size_t n_items, std::size_t block_size,
                            unsigned workers,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n_items == 0) return;
  if (block_size == 0) block_size = 1;
  const std::size_t n_blocks = (n_items + block_size - 1) / block_size;
  if (workers <= 1 || n_blocks == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b)
      fn(b * block_size, std::min(n_items, (b + 1) * block_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= n_blocks) return;
      fn(b * block_size, std::min(n_items, (b + 1) * block_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace hmc
