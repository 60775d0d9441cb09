#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace qorbit {

struct IndexChunk {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, count) into at most `workers` contiguous, ordered chunks.
inline std::vector<IndexChunk> partition(std::uint64_t count, unsigned workers) {
  std::vector<IndexChunk> chunks;
  if (count == 0) return chunks;
  const std::uint64_t n = std::clamp<std::uint64_t>(workers, 1, count);
  const std::uint64_t base = count / n;
  const std::uint64_t extra = count % n;
  std::uint64_t at = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    chunks.push_back({at, at + len});
    at += len;
  }
  return chunks;
}

/// Runs fn(chunk) for every chunk of [0, count) and returns the results in
/// chunk order. Exceptions from any worker are rethrown after all join.
template <typename Fn>
auto map_chunks(std::uint64_t count, unsigned workers, Fn fn) {
  using Result = decltype(fn(IndexChunk{}));
  const auto chunks = partition(count, workers);
  std::vector<Result> results(chunks.size());
  if (chunks.size() <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = fn(chunks[i]);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks.size());
  std::vector<std::jthread> pool;
  pool.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    pool.emplace_back([&, i] {
      try {
        results[i] = fn(chunks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace qorbit
