#include "diskzeroes/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace dz::par {

namespace {
int g_threads = 0;  // 0 = unresolved

int resolve_threads() {
  if (const char* env = std::getenv("DISKZEROES_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}
}  // namespace

int thread_count() {
  if (g_threads == 0) g_threads = resolve_threads();
  return g_threads;
}

void set_thread_count(int n) { g_threads = n >= 1 ? n : 1; }

std::vector<std::vector<double>> run_chunks(
    long n, long chunk_size,
    const std::function<std::vector<double>(long, long, long)>& fn) {
  const long chunks = n <= 0 ? 0 : (n + chunk_size - 1) / chunk_size;
  std::vector<std::vector<double>> results(static_cast<size_t>(chunks));
  if (chunks == 0) return results;

  const int workers =
      static_cast<int>(std::min<long>(thread_count(), chunks));
  if (workers <= 1) {
    for (long c = 0; c < chunks; ++c) {
      long lo = c * chunk_size;
      long hi = std::min(n, lo + chunk_size);
      results[static_cast<size_t>(c)] = fn(c, lo, hi);
    }
    return results;
  }

  std::atomic<long> next{0};
  auto work = [&] {
    for (;;) {
      long c = next.fetch_add(1);
      if (c >= chunks) return;
      long lo = c * chunk_size;
      long hi = std::min(n, lo + chunk_size);
      results[static_cast<size_t>(c)] = fn(c, lo, hi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace dz::par
