#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace snop {

// Runs fn(chunk, begin, end) over a fixed partition of [0, n_items).
//
// The chunk layout depends only on n_items and n_chunks, never on the
// thread count, so callers that write disjoint outputs per chunk (or
// reduce chunk buffers in chunk order afterwards) get bit-identical
// results at any parallelism level.
inline void parallel_chunks(std::size_t n_items, std::size_t n_chunks,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                            unsigned n_threads = 0) {
  if (n_items == 0) return;
  if (n_chunks == 0 || n_chunks > n_items) n_chunks = n_items;
  if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;

  const std::size_t base = n_items / n_chunks;
  const std::size_t extra = n_items % n_chunks;
  auto chunk_begin = [&](std::size_t c) { return c * base + std::min(c, extra); };

  if (n_threads == 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c, chunk_begin(c), chunk_begin(c + 1));
    return;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      fn(c, chunk_begin(c), chunk_begin(c + 1));
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(n_threads, n_chunks);
  pool.reserve(n - 1);
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace snop
