#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crx/combinatorics.hpp"
#include "crx/errors.hpp"
#include "crx/graph.hpp"

namespace crx {

/// A block: maximal 2-connected subgraph, bridge, or isolated vertex.
struct Block {
  std::vector<EdgeId> edges;     // sorted
  std::vector<Vertex> vertices;  // sorted

  bool is_isolated_vertex() const { return edges.empty(); }
  bool is_bridge() const { return edges.size() == 1; }
  bool is_two_connected() const { return vertices.size() >= 3; }
};

/// Blocks are ordered by smallest edge id; isolated-vertex blocks follow, by vertex id.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  /// Block-cut tree edges as (block index, index into cut_vertices).
  std::vector<std::pair<int, int>> block_cut_tree;
};

struct EarDecomposition {
  std::vector<Vertex> initial_cycle;       // open vertex sequence, closes back to the front
  std::vector<std::vector<Vertex>> ears;   // paths; endpoints already built
};

struct GraphInvariants {
  std::optional<int> girth;  // nullopt for acyclic graphs
  int circumference = 0;     // 0 for acyclic graphs
  bool is_hamiltonian = false;
};

/// graph_invariants ran out of budget; the fields computed so far are attached.
class InvariantsBudgetExceeded : public BudgetExceeded {
 public:
  InvariantsBudgetExceeded(const BudgetExceeded& cause, GraphInvariants partial, bool circumference_is_lower_bound)
      : BudgetExceeded(cause.what(), cause.nodes()),
        partial_(partial),
        circumference_lower_bound_(circumference_is_lower_bound) {}
  const GraphInvariants& partial() const { return partial_; }
  /// True when partial().circumference is only the best cycle length found so far.
  bool circumference_is_lower_bound() const { return circumference_lower_bound_; }

 private:
  GraphInvariants partial_;
  bool circumference_lower_bound_;
};

/// |V| > k and no set of at most k - 1 vertices disconnects g.
bool is_k_connected(const Graph& g, int k);
bool is_two_connected(const Graph& g);

BlockDecomposition block_decomposition(const Graph& g);

bool is_minimally_2_connected(const Graph& g);

/// Throws NotTwoConnected unless g is 2-connected. The initial cycle is the
/// lexicographically least shortest cycle through vertex 0; each ear starts
/// with the lowest-id unused edge touching the built subgraph.
EarDecomposition ear_decomposition(const Graph& g);

/// Replays a decomposition: returns the set of edge ids it builds (sorted).
/// Throws InvalidParameter if an ear is trivial, not a path of g, or not
/// internally disjoint from what was built before it.
std::vector<EdgeId> replay_ears(const Graph& g, const EarDecomposition& dec);

/// Every k vertices lie on a common cycle. Structural tests for k = 1, 2;
/// for k >= 3 every k-subset is searched, which is exponential.
bool in_family_Fk(const Graph& g, int k, std::uint64_t budget = NodeBudget::kDefault);

/// Length of the shortest cycle, nullopt if acyclic.
std::optional<int> girth(const Graph& g);

/// A Hamilton cycle as a vertex sequence, or nullopt. Exact; throws BudgetExceeded.
std::optional<std::vector<Vertex>> hamilton_cycle(const Graph& g, std::uint64_t budget = NodeBudget::kDefault);

GraphInvariants graph_invariants(const Graph& g, std::uint64_t budget = NodeBudget::kDefault);

/// Requires n >= 3.
bool is_hypohamiltonian(const Graph& g, std::uint64_t budget = NodeBudget::kDefault);

/// All simple cycles, each once, as edge-id lists. Exhaustive; for small graphs.
std::vector<std::vector<EdgeId>> all_cycles(const Graph& g, std::uint64_t budget = NodeBudget::kDefault);

}  // namespace crx
