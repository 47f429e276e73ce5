#pragma once

#include <cstddef>
#include <functional>

namespace swarm {

/// Worker count actually used: `requested` when positive, else the
/// SWARMCTL_THREADS environment variable, else hardware concurrency.
/// Always at least 1.
unsigned resolve_thread_count(unsigned requested = 0);

/// Runs fn(block) for block = 0..block_count-1 on up to `threads` workers.
/// Blocks are self-contained units whose results the caller stores by index,
/// so the outcome is independent of scheduling and worker count.
void parallel_for_blocks(std::size_t block_count, unsigned threads,
                         const std::function<void(std::size_t)>& fn);

}  // namespace swarm
