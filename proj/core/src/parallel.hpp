#pragma once

#include <cstddef>
#include <future>
#include <utility>
#include <vector>

namespace rcn::detail {

inline int clamp_threads(int threads, std::size_t count) {
  if (threads < 1) threads = 1;
  if (static_cast<std::size_t>(threads) > count) threads = count == 0 ? 1 : static_cast<int>(count);
  return threads;
}

/// Runs fn(begin, end, chunk) over [0, count) split into `threads` contiguous
/// chunks. Results must be merged by the caller in chunk order; exceptions
/// surface in chunk order as well. threads <= 1 runs inline.
template <class Fn>
void parallel_chunks(std::size_t count, int threads, Fn&& fn) {
  threads = clamp_threads(threads, count);
  if (threads <= 1) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  const std::size_t per = (count + threads - 1) / threads;
  std::vector<std::future<void>> futures;
  futures.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = per * static_cast<std::size_t>(t);
    const std::size_t end = begin + per < count ? begin + per : count;
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async,
                                 [&fn, begin, end, t] { fn(begin, end, static_cast<std::size_t>(t)); }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace rcn::detail
