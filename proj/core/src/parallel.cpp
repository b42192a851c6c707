#include "ramsey/parallel.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace ramsey {

Budget Budget::unlimited() {
  return {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<double>::infinity()};
}

Budget Budget::from_environment() {
  Budget b;
  if (const char* env = std::getenv("RAMSEY_BUDGET_SECS")) {
    try {
      b.max_seconds = std::stod(env);
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return b;
}

SearchControl::SearchControl(const Budget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool SearchControl::charge(std::uint64_t n) {
  const std::uint64_t total = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
  if (total > budget_.max_nodes || elapsed_seconds() > budget_.max_seconds) {
    aborted_.store(true, std::memory_order_relaxed);
    stop_.store(true, std::memory_order_relaxed);
    return false;
  }
  return true;
}

double SearchControl::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

TaskPool::TaskPool(std::size_t task_count, unsigned workers) {
  if (workers == 0) workers = 1;
  queues_.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) queues_.push_back(std::make_unique<Queue>());
  // Contiguous chunks keep each worker's share in lexicographic order.
  const std::size_t chunk = (task_count + workers - 1) / workers;
  for (std::size_t i = 0; i < task_count; ++i) queues_[i / (chunk == 0 ? 1 : chunk)]->items.push_back(i);
}

std::optional<std::size_t> TaskPool::acquire(unsigned worker) {
  {
    auto& own = *queues_[worker];
    std::lock_guard lock(own.mutex);
    if (!own.items.empty()) {
      const std::size_t t = own.items.front();
      own.items.pop_front();
      return t;
    }
  }
  for (std::size_t i = 1; i < queues_.size(); ++i) {
    auto& victim = *queues_[(worker + i) % queues_.size()];
    std::lock_guard lock(victim.mutex);
    if (!victim.items.empty()) {
      const std::size_t t = victim.items.back();
      victim.items.pop_back();
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
