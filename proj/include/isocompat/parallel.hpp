#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace isocompat {

/// Run body(i) for i in [0, count) on up to `threads` workers using contiguous chunks.
/// Bodies must write only to slot i of their output, which keeps results independent
/// of the thread count.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2 * threads) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

}  // namespace isocompat
