#pragma once

#include <functional>
#include <vector>

namespace dz::par {

// Worker-thread count: set_thread_count() wins, then DISKZEROES_THREADS,
// then 1. Results never depend on it; only wall time does.
int thread_count();
void set_thread_count(int n);

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks,
// possibly concurrently. Results land in a vector indexed by chunk, so a
// caller combining them in chunk order gets bitwise identical sums for any
// thread count.
std::vector<std::vector<double>> run_chunks(
    long n, long chunk_size,
    const std::function<std::vector<double>(long, long, long)>& fn);

}  // namespace dz::par
