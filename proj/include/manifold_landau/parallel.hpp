#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace manifold_landau {

/// Worker count: MANIFOLD_LANDAU_THREADS if set to a positive integer,
/// otherwise the number of available cores.
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// `body(chunk, begin, end)` on each. Chunks are numbered in index order so a
/// caller reducing over them in chunk order reproduces a sequential scan.
/// Small ranges run inline. The first exception thrown by any chunk is
/// rethrown on the calling thread.
template <class Body>
std::size_t parallel_chunks(std::size_t n, Body&& body, std::size_t min_chunk = 4096) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), n / min_chunk));
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return workers;
}

}  // namespace manifold_landau
