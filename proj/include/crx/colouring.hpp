#pragma once

#include <span>
#include <vector>

#include "crx/graph.hpp"

namespace crx {

/// Total map edge id -> colour in 0..r-1 over an owned graph.
///
/// Colourings are surjective onto 0..r-1 unless constructed with
/// allow_unused, which constructors never do.
class EdgeColouring {
 public:
  EdgeColouring(Graph g, std::vector<Colour> colours, int r, bool allow_unused = false);

  /// Relabels arbitrary nonnegative labels to 0.. in order of first appearance by edge id.
  static EdgeColouring compacted(Graph g, std::span<const Colour> labels);
  /// Every edge its own colour.
  static EdgeColouring rainbow(Graph g);

  const Graph& graph() const { return graph_; }
  std::span<const Colour> colours() const { return colours_; }
  Colour colour(EdgeId e) const { return colours_[static_cast<std::size_t>(e)]; }
  Colour colour(Vertex a, Vertex b) const;
  int colour_count() const { return r_; }
  bool allows_unused() const { return allow_unused_; }
  /// Number of colours that actually occur.
  int used_colour_count() const;
  /// Edges per colour.
  std::vector<int> class_sizes() const;

  /// Applies perm: new colour of e = perm[old colour]. perm must be a permutation of 0..r-1.
  EdgeColouring permuted(std::span<const Colour> perm) const;

  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
    return a.r_ == b.r_ && a.colours_ == b.colours_ && a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
  std::vector<Colour> colours_;
  int r_;
  bool allow_unused_;
};

/// Builds colour vectors edge by edge from vertex pairs; unset edges are reported.
class ColouringBuilder {
 public:
  explicit ColouringBuilder(const Graph& g) : g_(g), colours_(static_cast<std::size_t>(g.size()), -1) {}
  void set(Vertex a, Vertex b, Colour c);
  void set_edge(EdgeId e, Colour c) { colours_.at(static_cast<std::size_t>(e)) = c; }
  bool is_set(Vertex a, Vertex b) const;
  /// Colours every unset edge with c.
  void fill_unset(Colour c);
  /// Throws InvalidParameter if an edge is unset.
  EdgeColouring finish(int r) const;

 private:
  const Graph& g_;
  std::vector<Colour> colours_;
};

}  // namespace crx
