#pragma once

#include <cstddef>
#include <functional>

namespace resonance {

/// Number of worker threads used by ParallelFor. Defaults to the hardware
/// concurrency. Results never depend on this value.
unsigned WorkerCount() noexcept;
void SetWorkerCount(unsigned workers) noexcept;

/// Splits [0, n) into contiguous chunks and runs `body(begin, end)` on each,
/// one chunk per worker. Exceptions from any chunk are rethrown on the caller.
void ParallelFor(std::size_t n,
                 const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace resonance
