#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crx/colouring.hpp"
#include "crx/combinatorics.hpp"
#include "crx/graph.hpp"

namespace crx {

/// Self-verification settings shared by the constructors. With verify set,
/// a constructor runs the exact verifier for its declared k and throws
/// ConstructionRejected if the verifier finds a counterexample.
struct ConstructOptions {
  bool verify = true;
  std::uint64_t budget = NodeBudget::kDefault;
  int threads = 1;
};

/// S-subdivided closed walk: paths[i] runs from anchors[i] to anchors[(i+1) % k].
struct WalkWitness {
  std::vector<Vertex> anchor_vertices;
  std::vector<std::vector<Vertex>> paths;  // a trivial path is the single vertex {v_i}
};

/// Wheel in the generator labelling (rim 0..n-1, centre n), 1 <= k <= n+1.
EdgeColouring colour_wheel(int n, int k, const ConstructOptions& opts = {});
/// Colour count colour_wheel(n, k) uses.
int wheel_colour_count(int n, int k);

/// 3-colouring of K_n in which every pair lies on a rainbow triangle (n >= 3).
EdgeColouring colour_complete_2rainbow(int n, const ConstructOptions& opts = {});

/// Uniform random (2k-1)-colourings of K_n until one is a k-rainbow cycle colouring.
EdgeColouring colour_complete_random(int n, int k, std::uint64_t seed, int max_attempts,
                                     const ConstructOptions& opts = {});

enum class BipartiteScheme {
  Auto,           // the scheme with the fewest colours for (m, n, k)
  FourColour,     // k = 1
  Rainbow,        // m = k (includes k = 2, m = 2)
  Colex,          // k = 2, m = 3, n >= 36
  EightColour,    // k = 2, m >= 4
  SixK,           // m >= 3k
};

/// K_{m,n} with U = 0..m-1 and V = m..m+n-1. Throws RegimeUnsupported outside the covered regimes.
EdgeColouring colour_bipartite(int m, int n, int k, BipartiteScheme scheme = BipartiteScheme::Auto,
                               const ConstructOptions& opts = {});

/// Blow-up of colour_complete_2rainbow(t) onto complete_multipartite(sizes); verified for k = 1.
EdgeColouring colour_multipartite_blowup(std::span<const int> sizes, const ConstructOptions& opts = {});

/// Uniform random 2k-colourings of K_{t x n} until one is a k-rainbow cycle colouring.
EdgeColouring colour_balanced_multipartite_random(int t, int n, int k, std::uint64_t seed, int max_attempts,
                                                  const ConstructOptions& opts = {});

/// Q_n in the generator labelling; k in {1, 2, 3} or k >= 2^{n-1}.
EdgeColouring colour_cube(int n, int k, const ConstructOptions& opts = {});

/// Vertex sequence of the reflected Gray code Hamilton cycle of Q_n.
std::vector<Vertex> gray_code_cycle(int n);

/// Recursive colouring of Q_n, n = aK + b with a >= 1 and 0 <= b < K. Q_n is
/// split as Q_{(a-1)K+b} (low bits) (+) Q_K (high bits) with disjoint colour
/// sets; the base Q_{K+b} is rainbow. Requires K >= 2 and n >= K.
EdgeColouring colour_cube_recursive(int n, int k, int K);

/// Colour count colour_cube_recursive(n, k, K) uses.
int cube_recursive_colour_count(int n, int K);

/// A rainbow S-subdivided closed walk in colour_cube_recursive(n, k, K) for the
/// tuple, built by splicing walks of the two factors. Base walks come from
/// find_subdivided_closed_walk; throws BaseWalkNotFound when a base cube has
/// no walk for the projected tuple.
WalkWitness cube_recursive_walk(int n, int K, std::span<const Vertex> tuple,
                                std::uint64_t budget = NodeBudget::kDefault);

/// Exact backtracking search for an S-subdivided closed walk. Internal vertices
/// avoid every anchor and each other. With a colouring the walk must also be
/// rainbow. Throws BudgetExceeded.
std::optional<WalkWitness> find_subdivided_closed_walk(const Graph& g, std::span<const Vertex> tuple,
                                                       const EdgeColouring* colouring = nullptr,
                                                       std::uint64_t budget = NodeBudget::kDefault);

/// Checks every walk condition, plus rainbow when a colouring is given.
bool is_valid_walk(const Graph& g, const WalkWitness& w, const EdgeColouring* colouring = nullptr);

/// e(G) - 1 colours, verified for k = 1. g in F_1, not a cycle.
EdgeColouring colour_save_one_crx1(const Graph& g, const ConstructOptions& opts = {});
/// e(G) - 1 colours, verified for k = 2. g 2-connected, not minimally.
EdgeColouring colour_save_one_crx2(const Graph& g, const ConstructOptions& opts = {});

/// k^2 - 1 colours on path_cycle_join(k, t), every k-set in a rainbow tree. k >= 2.
EdgeColouring colour_join_rxk(int k, int t, const ConstructOptions& opts = {});

/// For minimally 2-connected g and distinct edges e, e2: vertices (u, v) such
/// that every cycle through both uses e and e2. Validated by cycle enumeration.
std::pair<Vertex, Vertex> minimal_2conn_obstruction(const Graph& g, EdgeId e, EdgeId e2);

/// Petersen graph in the generator labelling: a vertex v outside e and e2
/// such that every Hamilton cycle of P - v uses both. Validated by enumeration.
Vertex petersen_pair_obstruction(EdgeId e, EdgeId e2);

}  // namespace crx
