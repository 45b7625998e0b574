#include "cycle_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "crx/errors.hpp"

namespace crx::detail {

namespace {
constexpr int kFar = std::numeric_limits<int>::max() / 4;
}

CycleSearcher::CycleSearcher(const Graph& g, std::span<const Colour> colour_of, int colour_bound,
                             std::shared_ptr<const std::vector<int>> distances)
    : g_(g), colour_(colour_of), dist_(std::move(distances)), n_(static_cast<std::size_t>(g.order())) {
  if (colour_of.size() != static_cast<std::size_t>(g.size())) {
    throw InvalidParameter("colour vector does not match edge count");
  }
  for (Colour c : colour_of) {
    if (c < 0 || c >= colour_bound) throw InvalidParameter("colour id outside declared range");
  }
  if (!dist_) dist_ = std::make_shared<const std::vector<int>>(all_pairs_distances(g));
  on_path_.assign(n_, 0);
  required_mask_.assign(n_, 0);
  colour_used_.assign(static_cast<std::size_t>(std::max(colour_bound, 1)), 0);
  stamp_.assign(n_, 0);
}

std::vector<Colour> identity_colours(const Graph& g) {
  std::vector<Colour> c(static_cast<std::size_t>(g.size()));
  std::iota(c.begin(), c.end(), 0);
  return c;
}

std::optional<FoundCycle> CycleSearcher::find(std::span<const Vertex> required, int max_length, NodeMeter& meter) {
  if (required.empty()) throw InvalidParameter("cycle search needs at least one required vertex");
  anchor_ = required[0];
  max_length_ = std::min<int>(max_length, static_cast<int>(n_));
  if (max_length_ < 3) return std::nullopt;
  for (Vertex s : required) {
    if (g_.degree(s) < 2 || dist(anchor_, s) < 0) return std::nullopt;
  }
  meter_ = &meter;
  required_.assign(required.begin() + 1, required.end());
  for (Vertex s : required_) required_mask_[s] = 1;
  path_.assign(1, anchor_);
  path_edges_.clear();
  on_path_[anchor_] = 1;

  std::optional<FoundCycle> result;
  int remaining = static_cast<int>(required_.size());
  bool ok = false;
  try {
    ok = remaining_lower_bound(anchor_, remaining) <= max_length_ && dfs(anchor_, 0, remaining);
  } catch (...) {
    for (Vertex v : path_) on_path_[v] = 0;
    for (EdgeId e : path_edges_) colour_used_[colour_[e]] = 0;
    for (Vertex s : required_) required_mask_[s] = 0;
    throw;
  }
  if (ok) result = FoundCycle{path_, path_edges_};

  for (Vertex v : path_) on_path_[v] = 0;
  // On success the closing edge is last and was never marked used; on failure nothing is left.
  if (ok) {
    for (std::size_t i = 0; i + 1 < path_edges_.size(); ++i) colour_used_[colour_[path_edges_[i]]] = 0;
  }
  for (Vertex s : required_) required_mask_[s] = 0;
  return result;
}

int CycleSearcher::remaining_lower_bound(Vertex w, int remaining) const {
  if (remaining == 0) {
    int d = dist(w, anchor_);
    return d < 0 ? kFar : d;
  }
  int best = 0;
  for (Vertex s : required_) {
    if (on_path_[s] || s == w) continue;
    int a = dist(w, s);
    int b = dist(s, anchor_);
    if (a < 0 || b < 0) return kFar;
    best = std::max(best, a + b);
  }
  return best;
}

bool CycleSearcher::targets_reachable(Vertex w, int remaining) {
  if (++stamp_gen_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    stamp_gen_ = 1;
  }
  queue_.clear();
  queue_.push_back(w);
  stamp_[w] = stamp_gen_;
  int found = 0;
  bool anchor_seen = false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex x = queue_[head];
    for (const Incidence& inc : g_.neighbours(x)) {
      Vertex y = inc.to;
      if (y == anchor_) {
        anchor_seen = true;
        continue;
      }
      if (on_path_[y] || stamp_[y] == stamp_gen_) continue;
      stamp_[y] = stamp_gen_;
      if (required_mask_[y]) ++found;
      queue_.push_back(y);
    }
    if (anchor_seen && found == remaining) return true;
  }
  return anchor_seen && found == remaining;
}

bool CycleSearcher::dfs(Vertex cur, int len, int remaining) {
  for (const Incidence& inc : g_.neighbours(cur)) {
    meter_->tick();
    Vertex w = inc.to;
    Colour c = colour_[inc.edge];
    if (colour_used_[c]) continue;
    if (w == anchor_) {
      if (remaining == 0 && len + 1 >= 3) {
        path_edges_.push_back(inc.edge);
        return true;
      }
      continue;
    }
    if (on_path_[w]) continue;
    int rem = remaining - required_mask_[w];
    if (len + 1 + remaining_lower_bound(w, rem) > max_length_) continue;

    on_path_[w] = 1;
    colour_used_[c] = 1;
    path_.push_back(w);
    path_edges_.push_back(inc.edge);
    if (targets_reachable(w, rem) && dfs(w, len + 1, rem)) return true;
    path_.pop_back();
    path_edges_.pop_back();
    colour_used_[c] = 0;
    on_path_[w] = 0;
  }
  return false;
}

CoverageChecker::CoverageChecker(const Graph& g, std::span<const Colour> colour_of, int colour_bound, int max_length,
                                 std::shared_ptr<const std::vector<int>> distances, std::size_t cache_size)
    : searcher_(g, colour_of, colour_bound, std::move(distances)),
      max_length_(max_length),
      words_((static_cast<std::size_t>(g.order()) + 63) / 64),
      cache_size_(cache_size) {}

bool CoverageChecker::covered(std::span<const Vertex> s, NodeMeter& meter) {
  for (std::size_t i = 0; i < cache_.size(); ++i) {
    const auto& bits = cache_[i];
    bool all = true;
    for (Vertex v : s) {
      if (!((bits[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U)) {
        all = false;
        break;
      }
    }
    if (all) {
      if (i != 0) std::rotate(cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(i),
                              cache_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return true;
    }
  }
  auto found = searcher_.find(s, max_length_, meter);
  if (!found) return false;
  std::vector<std::uint64_t> bits(words_, 0);
  for (Vertex v : found->vertices) bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  cache_.insert(cache_.begin(), std::move(bits));
  if (cache_.size() > cache_size_) cache_.pop_back();
  return true;
}

SubsetScan scan_subsets(int n, int k, const std::function<SubsetPredicate()>& make_worker, NodeBudget& budget,
                        int threads) {
  SubsetScan scan;
  if (k < 0 || k > n) return scan;
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  threads = std::max(1, threads);

  if (threads == 1 || total < 64) {
    SubsetPredicate check = make_worker();
    NodeMeter meter(budget);
    for (ColexSubsets it(n, k); !it.done(); it.next()) {
      ++scan.subsets_checked;
      if (!check(it.current(), meter)) {
        auto s = it.current();
        scan.counterexample = std::vector<Vertex>(s.begin(), s.end());
        break;
      }
    }
    meter.flush();
    scan.nodes = meter.total();
    return scan;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(16, total / (static_cast<std::uint64_t>(threads) * 32));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kSaturated};
  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      SubsetPredicate check = make_worker();
      NodeMeter meter(budget);
      std::uint64_t local_checked = 0;
      for (;;) {
        if (abort.load()) break;
        std::uint64_t c = next_chunk.fetch_add(1);
        if (c >= chunks) break;
        std::uint64_t lo = c * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo > best.load()) continue;
        ColexSubsets it(n, k);
        it.seek(lo);
        for (; !it.done() && it.rank() < hi; it.next()) {
          if (it.rank() > best.load()) break;
          ++local_checked;
          if (!check(it.current(), meter)) {
            std::uint64_t r = it.rank();
            std::uint64_t cur = best.load();
            while (r < cur && !best.compare_exchange_weak(cur, r)) {
            }
            break;
          }
        }
      }
      meter.flush();
      checked += local_checked;
      nodes += meter.total();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      abort = true;
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  scan.subsets_checked = checked.load();
  scan.nodes = nodes.load();
  if (best.load() != kSaturated) {
    ColexSubsets it(n, k);
    it.seek(best.load());
    auto s = it.current();
    scan.counterexample = std::vector<Vertex>(s.begin(), s.end());
  }
  return scan;
}

void for_each_cycle(const Graph& g, const std::function<bool(const FoundCycle&)>& visit, NodeMeter& meter) {
  const int n = g.order();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  FoundCycle cyc;
  bool stop = false;
  Vertex start = 0;

  std::function<void(Vertex)> rec = [&](Vertex cur) {
    for (const Incidence& inc : g.neighbours(cur)) {
      if (stop) return;
      meter.tick();
      Vertex w = inc.to;
      if (w == start) {
        if (cyc.vertices.size() >= 3 && cyc.vertices[1] < cyc.vertices.back()) {
          cyc.edges.push_back(inc.edge);
          if (!visit(cyc)) stop = true;
          cyc.edges.pop_back();
        }
        continue;
      }
      if (w < start || on[w]) continue;
      on[w] = 1;
      cyc.vertices.push_back(w);
      cyc.edges.push_back(inc.edge);
      rec(w);
      cyc.vertices.pop_back();
      cyc.edges.pop_back();
      on[w] = 0;
    }
  };

  for (start = 0; start < n && !stop; ++start) {
    cyc.vertices.assign(1, start);
    cyc.edges.clear();
    on[start] = 1;
    rec(start);
    on[start] = 0;
  }
}

}  // namespace crx::detail
