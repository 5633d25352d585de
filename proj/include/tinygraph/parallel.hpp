#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tinygraph {

/// Worker count: explicit value if given, else $TINYGRAPH_THREADS, else 1.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

/// Runs fn(task, worker) for task in [0, tasks) on `threads` workers. Tasks
/// are claimed dynamically, so callers must store per-task results and
/// reduce them in task order. If several tasks throw, the exception of the
/// lowest task index is rethrown.
template <class Fn>
void parallel_for(std::size_t tasks, unsigned threads, Fn&& fn) {
  if (threads <= 1 || tasks <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t, 0U);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::size_t failed_task = tasks;
  std::exception_ptr failure;
  auto body = [&](unsigned worker) {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks) return;
      try {
        fn(t, worker);
      } catch (...) {
        std::lock_guard lock(guard);
        if (t < failed_task) {
          failed_task = t;
          failure = std::current_exception();
        }
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < count; ++w) pool.emplace_back(body, w);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tinygraph
