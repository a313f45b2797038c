#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fuzzanon {

// Worker count used by the parallel kernels; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(i) for i in [0, n). Work is handed out in fixed-size blocks from a
// shared counter, so any writes must go to disjoint, preallocated slots.
// Results must not depend on scheduling; everything built on this keeps
// per-index outputs and reduces them in index order afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Ordered block reduction: partial[b] = reduce over block b (computed in
// parallel), then merge(partial[0]), merge(partial[1]), ... serially. The
// block size is a constant, so sums of reals come out identical for every
// thread count.
template <typename Partial>
void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t begin, std::size_t end, Partial&)>& body,
                     const std::function<void(Partial&)>& merge) {
  if (n == 0) return;
  const std::size_t nblocks = (n + block_size - 1) / block_size;
  std::vector<Partial> partials(nblocks);
  parallel_for(nblocks, [&](std::size_t b) {
    const std::size_t begin = b * block_size;
    const std::size_t end = std::min(n, begin + block_size);
    body(begin, end, partials[b]);
  });
  for (auto& p : partials) merge(p);
}

}  // namespace fuzzanon
