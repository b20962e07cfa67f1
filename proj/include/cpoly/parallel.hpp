#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cpoly {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

// Runs body(chunk, begin, end) over [0, count) split into contiguous chunks,
// one per worker. Chunk boundaries depend only on count and the thread
// count, so callers that reduce per-chunk results in chunk order get the same
// answer on every run.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                            static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t step = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * step);
    const std::size_t end = std::min(count, begin + step);
    pool.emplace_back([&body, t, begin, end] { body(std::size_t{t}, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cpoly
