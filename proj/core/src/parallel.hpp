#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace anocan::detail {

inline unsigned resolve_jobs(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// body(worker, begin, end). The first exception thrown by any worker is
/// rethrown after all workers have joined.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned jobs, Body&& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), count));
  if (workers == 1) {
    body(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(static_cast<unsigned>(w), begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline unsigned worker_count(std::uint64_t count, unsigned jobs) {
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), count)));
}

}  // namespace anocan::detail
