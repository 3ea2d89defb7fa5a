#pragma once

#include <cstddef>
#include <functional>

namespace trackbench {

// Number of worker threads to actually use: a non-positive request falls
// back to the hardware concurrency.
[[nodiscard]] int resolve_thread_count(int requested);

// Runs body(i) for i in [0, count) across the given number of threads. Work
// items must write only their own slots in any shared output. The first
// exception thrown by a body is rethrown on the calling thread once all
// workers finished.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace trackbench
