#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pronet {

// Fixed-size worker pool executing index ranges in static chunks.
//
// Every parallel loop in the simulator writes disjoint output slots and keeps
// reductions inside a single item (one firm, one supplier), so results are
// identical for any worker count. The pool only changes wall time.
class ThreadPool {
 public:
  using Chunk = std::function<void(std::size_t, std::size_t)>;

  explicit ThreadPool(unsigned n_threads) {
    if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    for (unsigned i = 1; i < n_threads; ++i) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lk(mutex_);
      stop_ = true;
    }
    wake_.notify_all();
    for (auto& w : workers_) w.join();
  }

  unsigned size() const { return static_cast<unsigned>(workers_.size()) + 1; }

  // Runs chunk(a, b) over a static partition of [begin, end); the calling
  // thread takes the first slice. Blocks until every slice finished.
  void for_range(std::size_t begin, std::size_t end, const Chunk& chunk) {
    if (end <= begin) return;
    const unsigned n = size();
    if (n == 1) {
      chunk(begin, end);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(mutex_);
      job_ = &chunk;
      job_begin_ = begin;
      job_end_ = end;
      next_slice_ = 1;
      pending_ = static_cast<unsigned>(workers_.size());
      ++generation_;
    }
    wake_.notify_all();
    run_slice(0, begin, end, n, chunk);
    std::unique_lock<std::mutex> lk(mutex_);
    done_.wait(lk, [&] { return pending_ == 0; });
    job_ = nullptr;
  }

 private:
  static void run_slice(unsigned idx, std::size_t begin, std::size_t end, unsigned n,
                        const Chunk& chunk) {
    const std::size_t len = end - begin;
    const std::size_t a = begin + len * idx / n;
    const std::size_t b = begin + len * (idx + 1) / n;
    if (a < b) chunk(a, b);
  }

  void worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
      const Chunk* job = nullptr;
      std::size_t begin = 0;
      std::size_t end = 0;
      unsigned idx = 0;
      unsigned n = 0;
      {
        std::unique_lock<std::mutex> lk(mutex_);
        wake_.wait(lk, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        job = job_;
        begin = job_begin_;
        end = job_end_;
        idx = next_slice_++;
        n = size();
      }
      run_slice(idx, begin, end, n, *job);
      {
        std::lock_guard<std::mutex> lk(mutex_);
        if (--pending_ == 0) done_.notify_one();
      }
    }
  }

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const Chunk* job_ = nullptr;
  std::size_t job_begin_ = 0;
  std::size_t job_end_ = 0;
  unsigned next_slice_ = 0;
  unsigned pending_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

// nullptr pool runs inline.
inline void parallel_for(ThreadPool* pool, std::size_t begin, std::size_t end,
                         const ThreadPool::Chunk& chunk) {
  if (pool == nullptr) {
    if (begin < end) chunk(begin, end);
    return;
  }
  pool->for_range(begin, end, chunk);
}

}  // namespace pronet
