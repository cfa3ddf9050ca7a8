#include "mineq/sim.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mineq {

void run_blocks(std::uint64_t total, std::uint32_t block_size, unsigned threads,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  const std::size_t nblocks = detail::block_count(total, block_size);
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, nblocks));

  auto block_range = [&](std::size_t blk) {
    const std::uint64_t lo = static_cast<std::uint64_t>(blk) * block_size;
    const std::uint64_t hi = std::min<std::uint64_t>(lo + block_size, total);
    return std::pair{lo, hi};
  };

  if (workers <= 1) {
    for (std::size_t blk = 0; blk < nblocks; ++blk) {
      auto [lo, hi] = block_range(blk);
      body(blk, lo, hi);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t blk = next.fetch_add(1, std::memory_order_relaxed);
      if (blk >= nblocks) return;
      try {
        auto [lo, hi] = block_range(blk);
        body(blk, lo, hi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mineq
