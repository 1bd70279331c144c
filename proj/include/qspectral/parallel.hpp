#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qspectral {

// QSPECTRAL_THREADS override, else hardware concurrency.
int default_thread_count();

// Runs fn(i) for i in [0, count) on the given number of workers. Work items
// must write only to their own slots; results then aggregate in index order,
// which keeps every caller deterministic.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace qspectral
