#include "skypath/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace skypath {

unsigned worker_count() {
  if (const char* env = std::getenv("SKYPATH_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return static_cast<unsigned>(requested);
    } catch (const std::exception&) {
      // fall through to auto
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& body) {
  if (n <= 0) return;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  auto run = [&] {
    for (int k = next.fetch_add(1); k < n; k = next.fetch_add(1)) body(k);
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
}

}  // namespace skypath
