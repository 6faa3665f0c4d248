#pragma once

#include <functional>

namespace domcensus {

// Worker threads used by matrix products and the census loops.  The default
// is the hardware concurrency; set_max_threads(n) with n >= 1 overrides it,
// n <= 0 restores the default.
int max_threads();
void set_max_threads(int n);

// Split [0, count) into contiguous chunks and invoke fn(begin, end) on each,
// possibly from several threads.  The chunk boundaries depend only on count,
// never on the thread budget, so results assembled per-index are identical
// for any thread count.  fn must only write to state owned by its own chunk.
void parallel_chunks(int count, const std::function<void(int, int)>& fn);

}  // namespace domcensus
