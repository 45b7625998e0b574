#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crx/colouring.hpp"
#include "crx/combinatorics.hpp"
#include "crx/graph.hpp"

namespace crx {

enum class CertificateKind { DistanceBound, ColourCollision, ObstructionPair, Exhaustion };

/// Every cycle through `set` uses both edges e and e2.
struct Obstruction {
  EdgeId e = 0;
  EdgeId e2 = 0;
  std::vector<Vertex> set;
};

/// A reason why fewer colours cannot work.
///
/// - DistanceBound: every cycle through the k-set `set` has length >= bound.
/// - Exhaustion: all `count` canonical colourings with exactly `colours`
///   colours were enumerated and none is feasible (bound = colours + 1).
/// - ObstructionPair: every unordered edge pair appears in `obstructions`, so
///   all edges need distinct colours (bound = e(G)).
/// - ColourCollision: the specific `colouring` has no rainbow cycle through
///   `set`; a refutation of one colouring, not a graph-level bound (bound = 0).
struct Certificate {
  CertificateKind kind = CertificateKind::DistanceBound;
  int bound = 0;
  std::vector<Vertex> set;
  int colours = 0;
  std::uint64_t count = 0;
  std::vector<Obstruction> obstructions;
  std::optional<EdgeColouring> colouring;
};

/// Why exactly `colours` colours are infeasible.
struct InfeasibilityEvidence {
  int colours = 0;
  Certificate certificate;
};

enum class ResultKind { Exact, Interval, Unknown };

struct CrxResult {
  ResultKind kind = ResultKind::Unknown;
  int lower = 0;
  int upper = 0;
  std::optional<EdgeColouring> witness;  // achieves `upper`
  std::vector<InfeasibilityEvidence> evidence;  // one entry per colour count below `lower`
  std::uint64_t nodes = 0;

  bool exact() const { return kind == ResultKind::Exact; }
  int value() const { return lower; }
};

struct SolverOptions {
  std::uint64_t budget = NodeBudget::kDefault;
  /// Run even outside the default envelope (e(G) <= 16, C(n, k) <= 10^5).
  bool force = false;
  /// Colour counts whose Stirling number is at most this are exhausted even
  /// when a certificate already excludes them.
  std::uint64_t exhaustion_limit = 100'000;
};

/// Exact crx_k(g) by restricted-growth enumeration. Throws NotInFk, ScopeExceeded.
/// Running out of budget yields an interval result instead of an exception.
CrxResult crx_exact(const Graph& g, int k, const SolverOptions& opts = {});

/// Exact rx_k(g) (k-rainbow index) by the same enumeration; rx_1 = 0.
CrxResult rx_exact(const Graph& g, int k, const SolverOptions& opts = {});

struct DistanceBound {
  int bound = 0;
  std::vector<Vertex> set;  // lexicographically least set attaining the bound
  bool exhaustive = false;  // false when k-sets were sampled or the budget ran out
};

/// Max over k-sets of the shortest cycle through the set. Exhaustive when
/// C(n, k) <= 10^5, otherwise 2000 sets sampled from `seed`.
DistanceBound crx_lower_bound_distance(const Graph& g, int k, std::uint64_t budget = NodeBudget::kDefault,
                                       std::uint64_t seed = 0);

/// Best constructor upper bound against the best certificate lower bound,
/// without enumerating colourings. Throws NotInFk.
CrxResult crx_interval(const Graph& g, int k, std::uint64_t budget = NodeBudget::kDefault);

/// Counts canonical (restricted-growth) colourings of `edges` edges with
/// exactly r colours by walking the enumeration tree.
std::uint64_t count_canonical_colourings(int edges, int r);

/// Re-checks a certificate from scratch against g and k.
bool check_certificate(const Graph& g, int k, const Certificate& cert, std::uint64_t budget = NodeBudget::kDefault);

}  // namespace crx
