#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "crx/errors.hpp"

namespace crx {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Binomial coefficient, saturating at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Stirling number of the second kind S(n, k), saturating at kSaturated.
std::uint64_t stirling2(int n, int k);

/// k-subsets of {0, .., n-1} in colexicographic order.
///
/// A subset {c_0 < .. < c_{k-1}} has colex rank sum_i binomial(c_i, i + 1).
class ColexSubsets {
 public:
  ColexSubsets(int n, int k);

  /// Positions the iterator at the subset with the given colex rank.
  void seek(std::uint64_t rank);

  bool done() const { return done_; }
  std::span<const int> current() const { return subset_; }
  std::uint64_t rank() const { return rank_; }
  void next();

  std::uint64_t count() const { return binomial(n_, k_); }

 private:
  int n_;
  int k_;
  std::vector<int> subset_;
  std::uint64_t rank_ = 0;
  bool done_ = false;
};

std::uint64_t colex_rank(std::span<const int> subset);

/// Node counter shared by one logical search, possibly across worker threads.
///
/// Workers charge nodes in batches; the first charge that pushes the total
/// past the limit throws BudgetExceeded.
class NodeBudget {
 public:
  static constexpr std::uint64_t kDefault = 50'000'000;

  explicit NodeBudget(std::uint64_t limit = kDefault) : limit_(limit) {}
  NodeBudget(const NodeBudget&) = delete;
  NodeBudget& operator=(const NodeBudget&) = delete;

  void charge(std::uint64_t nodes) {
    std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > limit_) throw BudgetExceeded("search node budget exceeded", total);
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// Local batching front-end for NodeBudget, one per search routine.
class NodeMeter {
 public:
  explicit NodeMeter(NodeBudget& budget) : budget_(budget) {}
  NodeMeter(const NodeMeter&) = delete;
  NodeMeter& operator=(const NodeMeter&) = delete;
  ~NodeMeter() {
    // Never throw from a destructor; a final overshoot is reported by the next charge.
    if (pending_ != 0) {
      try {
        budget_.charge(pending_);
      } catch (const BudgetExceeded&) {
      }
    }
  }

  void tick() {
    ++total_;
    if (++pending_ == kBatch) flush();
  }
  void flush() {
    std::uint64_t p = pending_;
    pending_ = 0;
    budget_.charge(p);
  }
  std::uint64_t total() const { return total_; }

 private:
  static constexpr std::uint64_t kBatch = 1024;
  NodeBudget& budget_;
  std::uint64_t pending_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace crx
