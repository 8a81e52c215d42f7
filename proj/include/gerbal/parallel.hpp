#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace gerbal {

/// Degree of parallelism for brute-force scans. 1 runs inline.
struct Jobs {
  unsigned count = 1;
};

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) on each and
/// returns the results in chunk order, so reductions stay deterministic.
template <class Fn>
auto map_chunks(std::size_t total, Jobs jobs, Fn fn) {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs.count, total));
  std::vector<Result> results;
  if (workers <= 1) {
    results.push_back(fn(std::size_t{0}, total));
    return results;
  }
  const std::size_t step = (total + workers - 1) / workers;
  std::vector<std::future<Result>> futures;
  for (std::size_t b = 0; b < total; b += step)
    futures.push_back(std::async(std::launch::async, fn, b, std::min(total, b + step)));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace gerbal
