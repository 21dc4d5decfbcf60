#pragma once

#include <cstddef>
#include <functional>

namespace conoma {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency, 1 = inline). Indices are claimed atomically; the first
/// exception is rethrown after all workers join. Callers that need
/// deterministic output must write to per-index slots and reduce afterwards.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace conoma
