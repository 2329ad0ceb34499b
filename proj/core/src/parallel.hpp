#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "koti/capacity.hpp"

namespace koti::detail {

// Splits [0, total) into at most `jobs` chunks and folds each on its own
// thread. fold(begin, end) must be a pure function of the index range; the
// partials are merged in chunk order, so the result never depends on jobs.
template <typename Partial, typename Fold, typename Merge>
Partial parallel_fold(Count total, unsigned jobs, Fold fold, Merge merge) {
  if (jobs <= 1 || total < 2) return fold(Count{0}, total);
  const Count n_chunks = std::min<Count>(jobs, total);
  const Count chunk = (total + n_chunks - 1) / n_chunks;
  std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(n_chunks));
  for (Count c = 0; c < n_chunks; ++c) {
    const Count begin = c * chunk;
    const Count end = std::min(total, begin + chunk);
    workers.emplace_back([&partials, &fold, c, begin, end] {
      partials[static_cast<std::size_t>(c)] = fold(begin, end);
    });
  }
  for (auto& w : workers) w.join();
  Partial result{};
  for (const auto& p : partials) result = merge(result, p);
  return result;
}

} // namespace koti::detail
