/**
 * @file threads.hpp
 * @brief Deterministic parallel loop helper.
 *
 * Worker count comes from the ORBITFORGE_THREADS environment variable when
 * set (clamped to at least 1), otherwise from std::thread::hardware_concurrency.
 * Work is split into contiguous index ranges, one per worker, so any
 * reduction the caller performs over per-index slots is independent of the
 * number of workers.
 */
#pragma once

#include <cstddef>
#include <functional>

namespace orbitforge {

/// Number of workers parallel_for will use.
std::size_t worker_count();

/// Invoke fn(i) for every i in [0, count), split across workers.
/// fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace orbitforge
