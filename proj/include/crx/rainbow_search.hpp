#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crx/colouring.hpp"
#include "crx/combinatorics.hpp"
#include "crx/graph.hpp"

namespace crx {

struct CycleWitness {
  std::vector<Vertex> vertices;  // v_0 .. v_{L-1}; the cycle closes v_{L-1} v_0
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[(i + 1) % L]
};

struct TreeWitness {
  std::vector<EdgeId> edges;     // sorted
  std::vector<Vertex> vertices;  // sorted
};

enum class VerificationStatus { Certified, Counterexample };

struct VerificationReport {
  VerificationStatus status = VerificationStatus::Certified;
  std::optional<std::vector<Vertex>> bad_set;  // colex-least failing k-set
  std::uint64_t subsets_checked = 0;
  std::uint64_t nodes = 0;

  bool certified() const { return status == VerificationStatus::Certified; }
};

struct SearchOptions {
  std::uint64_t budget = NodeBudget::kDefault;
  int threads = 1;
};

/// A rainbow cycle through every vertex of s, or nullopt. s is treated as a set.
std::optional<CycleWitness> rainbow_cycle_through(const EdgeColouring& c, std::span<const Vertex> s,
                                                  std::uint64_t budget = NodeBudget::kDefault);

/// Shortest simple cycle containing s; nullopt when no cycle contains s.
std::optional<int> min_cycle_length_through(const Graph& g, std::span<const Vertex> s,
                                            std::uint64_t budget = NodeBudget::kDefault);

/// Certifies that every k-set lies on a rainbow cycle, or names the
/// colex-least k-set that does not (the same set for any thread count).
/// Throws NotInFk when the graph is not in F_k.
VerificationReport verify_k_rainbow_cycle_colouring(const EdgeColouring& c, int k, SearchOptions opts = {});

std::optional<TreeWitness> rainbow_tree_through(const EdgeColouring& c, std::span<const Vertex> s,
                                                std::uint64_t budget = NodeBudget::kDefault);

/// Every k-set is contained in a rainbow tree. Requires a connected graph.
VerificationReport verify_k_rainbow_index_colouring(const EdgeColouring& c, int k, SearchOptions opts = {});

/// True iff w is a cycle of c's graph (distinct vertices, length >= 3,
/// consistent edges) that contains s, and rainbow when require_rainbow.
bool is_valid_cycle_witness(const EdgeColouring& c, const CycleWitness& w, std::span<const Vertex> s,
                            bool require_rainbow = true);
bool is_valid_tree_witness(const EdgeColouring& c, const TreeWitness& w, std::span<const Vertex> s,
                           bool require_rainbow = true);

enum class CollisionMode {
  /// k vertices of the large class with identical colour vectors over U.
  IdenticalVectors,
  /// k vertices of the large class whose incident edges carry fewer than 2k
  /// distinct colours in total. Any cycle through them uses 2k of those edges.
  SharedColourSet,
};

/// For a colouring of complete_bipartite(m, n): a k-subset of V = m..m+n-1
/// that no rainbow cycle can contain, or nullopt. Returns the colex-least such set.
std::optional<std::vector<Vertex>> colour_class_collision(const EdgeColouring& c, int m, int k,
                                                          CollisionMode mode = CollisionMode::IdenticalVectors);

}  // namespace crx
