#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace schurforge {

// 0 or negative means "use the hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Fold `item` over [0, count) split into contiguous chunks, one worker per
// chunk, then merge the per-chunk accumulators in chunk order. Results are
// byte-identical across thread counts because both the per-chunk fold and
// the final merge run in index order.
template <class Accumulator, class Item, class Merge>
Accumulator parallel_fold(std::size_t count, int threads, Item item, Merge merge) {
  int workers = resolve_threads(threads);
  if (static_cast<std::size_t>(workers) > count) workers = count == 0 ? 1 : static_cast<int>(count);

  std::vector<Accumulator> partial(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto run_chunk = [&](int w) {
    std::size_t begin = count * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
    std::size_t end = count * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
    try {
      for (std::size_t i = begin; i < end; ++i) item(partial[static_cast<std::size_t>(w)], i);
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& t : pool) t.join();
  }
  for (auto& error : errors)
    if (error) std::rethrow_exception(error);

  Accumulator result{};
  for (auto& p : partial) merge(result, p);
  return result;
}

} // namespace schurforge
