#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ulam {

// Worker count for data-parallel sweeps: the ULAMCODES_THREADS environment
// variable when set to a positive value; 0 or unset means hardware
// concurrency.
int thread_count();

// Splits [0, total) into contiguous chunks and evaluates fn(begin, end) on
// each, one worker thread per chunk. Chunk results come back ordered by
// chunk, so any merge that walks them in order is deterministic no matter
// how the threads were scheduled.
template <typename R, typename Fn>
std::vector<R> parallel_chunks(std::uint64_t total, Fn&& fn) {
  std::uint64_t workers = static_cast<std::uint64_t>(thread_count());
  if (workers > total) {
    workers = total;
  }
  if (workers <= 1) {
    std::vector<R> out;
    if (total > 0) {
      out.push_back(fn(std::uint64_t{0}, total));
    }
    return out;
  }
  std::vector<R> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = begin + chunk < total ? begin + chunk : total;
    threads.emplace_back([&, w, begin, end] {
      try {
        results[w] = fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return results;
}

}  // namespace ulam
