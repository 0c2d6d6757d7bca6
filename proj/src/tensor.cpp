#include "cfdis/tensor.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cfdis::par {

namespace {

// Minimal persistent fork-join pool. One job at a time; the caller
// participates. Chunks own disjoint outputs so any worker count produces
// bit-identical results.
class Pool {
 public:
  explicit Pool(int workers) {
    for (int i = 0; i < workers; ++i)
      threads_.emplace_back([this] { worker_loop(); });
  }

  ~Pool() {
    {
      std::unique_lock<std::mutex> lk(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void run(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    int nw = int(threads_.size()) + 1;  // workers + caller
    std::int64_t chunk = (n + nw - 1) / nw;
    std::int64_t nchunks = (n + chunk - 1) / chunk;
    if (nchunks <= 1) {
      fn(0, n);
      return;
    }
    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> finished{0};
    auto drain = [&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= nchunks) break;
        std::int64_t b = i * chunk;
        fn(b, std::min(n, b + chunk));
        finished.fetch_add(1);
      }
    };
    {
      std::unique_lock<std::mutex> lk(mu_);
      job_ = &drain;
      generation_++;
    }
    cv_.notify_all();
    drain();
    // All chunks done; retract the job and wait for workers to step out of it.
    {
      std::unique_lock<std::mutex> lk(mu_);
      job_ = nullptr;
      while (finished.load() < nchunks || active_ != 0) {
        lk.unlock();
        std::this_thread::yield();
        lk.lock();
      }
    }
  }

 private:
  void worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void()>* job = nullptr;
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return stop_ || (job_ != nullptr && generation_ != seen); });
        if (stop_) return;
        seen = generation_;
        job = job_;
        ++active_;
      }
      (*job)();
      {
        std::unique_lock<std::mutex> lk(mu_);
        --active_;
      }
    }
  }

  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable cv_;
  const std::function<void()>* job_ = nullptr;  // guarded by mu_
  int active_ = 0;                              // guarded by mu_
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

int configured_threads() {
  if (const char* env = std::getenv("CFDIS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

Pool& pool() {
  static Pool p(configured_threads() - 1);
  return p;
}

}  // namespace

int thread_count() {
  static int n = configured_threads();
  return n;
}

void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (thread_count() <= 1 || n == 1) {
    fn(0, n);
    return;
  }
  pool().run(n, fn);
}

}  // namespace cfdis::par
