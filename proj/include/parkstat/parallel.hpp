#ifndef PARKSTAT_PARALLEL_HPP
#define PARKSTAT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace parkstat {

/// Evaluates `fn(shard)` for shard = 0..num_shards-1 on up to `threads`
/// workers and returns the results indexed by shard, so any reduction done by
/// the caller in shard order is independent of the thread count.
template <typename Result, typename Fn>
std::vector<Result> run_shards(int num_shards, int threads, Fn&& fn) {
  std::vector<Result> results(static_cast<std::size_t>(num_shards));
  const int workers = std::clamp(threads, 1, std::max(num_shards, 1));
  if (workers == 1) {
    for (int s = 0; s < num_shards; ++s) results[static_cast<std::size_t>(s)] = fn(s);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int s = next++; s < num_shards; s = next++) results[static_cast<std::size_t>(s)] = fn(s);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace parkstat

#endif  // PARKSTAT_PARALLEL_HPP
