#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ramsey {

/// Node and wall-clock limits for one search.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;

  static Budget unlimited();
  /// Defaults, with max_seconds taken from RAMSEY_BUDGET_SECS when set.
  static Budget from_environment();
};

/// Shared termination state of one search run: a node counter checked
/// against the budget, and a single stop flag raised by whichever worker
/// first finds a witness or runs out of budget.
class SearchControl {
 public:
  explicit SearchControl(const Budget& budget);

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }
  void request_stop() { stop_.store(true, std::memory_order_relaxed); }

  /// Adds `n` expanded nodes; returns false (and raises the abort flag)
  /// once the budget is exhausted.
  bool charge(std::uint64_t n);

  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  double elapsed_seconds() const;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> aborted_{false};
};

/// Per-worker node accounting that flushes to SearchControl in batches.
class NodeMeter {
 public:
  static constexpr std::uint64_t kBatch = 1024;

  explicit NodeMeter(SearchControl& control) : control_(control) {}
  ~NodeMeter() { flush(); }

  /// Counts one node; false when the run must stop.
  bool tick() {
    if (++pending_ >= kBatch) return flush();
    return !control_.stopped();
  }
  bool flush() {
    const bool ok = control_.charge(pending_);
    pending_ = 0;
    return ok && !control_.stopped();
  }

 private:
  SearchControl& control_;
  std::uint64_t pending_ = 0;
};

/// Static frontier of task indices split into per-worker deques. A worker
/// consumes its own deque from the front (preserving task order) and steals
/// from the back of the others when it runs dry.
class TaskPool {
 public:
  TaskPool(std::size_t task_count, unsigned workers);

  std::optional<std::size_t> acquire(unsigned worker);

 private:
  struct Queue {
    std::mutex mutex;
    std::deque<std::size_t> items;
  };
  std::vector<std::unique_ptr<Queue>> queues_;
};

/// Runs `body(worker_id)` on `workers` threads (worker 0 on the caller).
/// The first exception thrown by any worker is rethrown after all join.
template <typename F>
void run_workers(unsigned workers, F&& body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr error;
  auto guarded = [&](unsigned w) {
    try {
      body(w);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back([&guarded, w] { guarded(w); });
    guarded(0u);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ramsey
