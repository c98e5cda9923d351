#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace lrf {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// `fn(begin, end)` on each, returning the per-chunk results in chunk order.
/// Merging in chunk order keeps output independent of the thread count.
template <typename Fn>
auto parallel_chunks(std::size_t count, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}, std::size_t{0}));
  threads = std::max(1U, threads);
  const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  std::vector<Result> results(chunks);
  const std::size_t step = (count + chunks - 1) / chunks;
  if (chunks == 1) {
    results[0] = fn(0, count);
    return results;
  }
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = std::min(count, c * step);
    const std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&results, &fn, c, begin, end] { results[c] = fn(begin, end); });
  }
  workers.clear();
  return results;
}

}  // namespace lrf
