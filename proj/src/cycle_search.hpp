#pragma once

// Internal search kernels shared by graph_core, rainbow_search and the solver.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "crx/combinatorics.hpp"
#include "crx/graph.hpp"

namespace crx::detail {

struct FoundCycle {
  std::vector<Vertex> vertices;  // v_0 .. v_{L-1}, v_0 is the anchor
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[(i+1) % L]
};

/// Backtracking search for a cycle through a prescribed vertex set whose
/// edges carry pairwise distinct colours.
///
/// The search is anchored at the smallest required vertex and explores
/// neighbours in ascending id order, so the witness is deterministic. Pruning
/// uses graph distances (a lower bound on the remaining length) and a
/// reachability check in the graph minus the current path. With the identity
/// colouring the colour constraint is vacuous and this is a plain
/// cycle-through-S search.
class CycleSearcher {
 public:
  CycleSearcher(const Graph& g, std::span<const Colour> colour_of, int colour_bound,
                std::shared_ptr<const std::vector<int>> distances = nullptr);

  /// required: nonempty, sorted, distinct. Returns a cycle of length <= max_length.
  std::optional<FoundCycle> find(std::span<const Vertex> required, int max_length, NodeMeter& meter);

  const std::shared_ptr<const std::vector<int>>& distances() const { return dist_; }

 private:
  bool dfs(Vertex cur, int len, int remaining);
  int remaining_lower_bound(Vertex w, int remaining) const;
  bool targets_reachable(Vertex w, int remaining);
  int dist(Vertex a, Vertex b) const { return (*dist_)[static_cast<std::size_t>(a) * n_ + b]; }

  const Graph& g_;
  std::span<const Colour> colour_;
  std::shared_ptr<const std::vector<int>> dist_;
  std::size_t n_;

  // per-query scratch
  std::vector<char> on_path_;
  std::vector<char> required_mask_;
  std::vector<int> colour_used_;
  std::vector<Vertex> path_;
  std::vector<EdgeId> path_edges_;
  std::vector<Vertex> required_;
  std::vector<std::uint32_t> stamp_;
  std::vector<Vertex> queue_;
  std::uint32_t stamp_gen_ = 0;
  Vertex anchor_ = 0;
  int max_length_ = 0;
  NodeMeter* meter_ = nullptr;
};

/// CycleSearcher plus a small most-recently-used cache of witness cycles;
/// most k-sets are covered by a cycle found for an earlier set.
class CoverageChecker {
 public:
  CoverageChecker(const Graph& g, std::span<const Colour> colour_of, int colour_bound, int max_length,
                  std::shared_ptr<const std::vector<int>> distances = nullptr, std::size_t cache_size = 32);

  /// True iff some cycle through s satisfies the colour constraint.
  bool covered(std::span<const Vertex> s, NodeMeter& meter);
  CycleSearcher& searcher() { return searcher_; }

 private:
  CycleSearcher searcher_;
  int max_length_;
  std::size_t words_;
  std::size_t cache_size_;
  std::vector<std::vector<std::uint64_t>> cache_;  // front = most recent
};

/// Identity colouring (edge id = colour): turns CycleSearcher into a plain cycle search.
std::vector<Colour> identity_colours(const Graph& g);

struct SubsetScan {
  std::optional<std::vector<Vertex>> counterexample;  // colex-least failing subset
  std::uint64_t subsets_checked = 0;
  std::uint64_t nodes = 0;
};

/// Checks every k-subset (colex order). `check` must be pure per subset and is
/// invoked through a per-worker state produced by `make_worker`. The reported
/// counterexample is the colex-least failing subset regardless of threads.
using SubsetPredicate = std::function<bool(std::span<const Vertex>, NodeMeter&)>;
SubsetScan scan_subsets(int n, int k, const std::function<SubsetPredicate()>& make_worker, NodeBudget& budget,
                        int threads);

/// Every simple cycle exactly once (anchored at its smallest vertex, one
/// direction). The callback returns false to stop.
void for_each_cycle(const Graph& g, const std::function<bool(const FoundCycle&)>& visit, NodeMeter& meter);

}  // namespace crx::detail
