#pragma once

#include <cstddef>
#include <functional>

namespace tessera {

// Worker count from TESSERA_THREADS, else the hardware concurrency (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// processed exactly once; exceptions are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = thread_count());

}  // namespace tessera
