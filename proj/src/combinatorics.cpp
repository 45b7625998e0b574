#include "crx/combinatorics.hpp"

#include <algorithm>

namespace crx {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact multiplicative formula with 128-bit intermediates.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = sat_add(sat_mul(static_cast<std::uint64_t>(j), row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  return row[k];
}

ColexSubsets::ColexSubsets(int n, int k) : n_(n), k_(k) {
  if (k < 0 || n < 0) throw InvalidParameter("ColexSubsets: negative size");
  subset_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset_[i] = i;
  done_ = k > n;
}

void ColexSubsets::seek(std::uint64_t rank) {
  if (rank >= count()) {
    done_ = true;
    return;
  }
  done_ = false;
  rank_ = rank;
  std::uint64_t rest = rank;
  int upper = n_;
  for (int i = k_ - 1; i >= 0; --i) {
    // Largest c < upper with binomial(c, i + 1) <= rest.
    int c = upper - 1;
    while (c > i && binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i) + 1) > rest) --c;
    subset_[i] = c;
    rest -= binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i) + 1);
    upper = c;
  }
}

void ColexSubsets::next() {
  if (done_) return;
  ++rank_;
  for (int i = 0; i < k_; ++i) {
    int limit = (i + 1 < k_) ? subset_[i + 1] : n_;
    if (subset_[i] + 1 < limit) {
      ++subset_[i];
      for (int j = 0; j < i; ++j) subset_[j] = j;
      return;
    }
  }
  done_ = true;
}

std::uint64_t colex_rank(std::span<const int> subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    r += binomial(static_cast<std::uint64_t>(subset[i]), i + 1);
  }
  return r;
}

}  // namespace crx
