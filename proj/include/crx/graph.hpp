#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace crx {

using Vertex = int;
using EdgeId = int;
using Colour = int;

struct Edge {
  Vertex u;
  Vertex v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the neighbour and the id of the joining edge.
struct Incidence {
  Vertex to;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored in canonical order (sorted by (u, v) with u < v) and an
/// edge's id is its position in that order. Adjacency lists are sorted by
/// neighbour id. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidParameter on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> neighbours(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  /// Endpoint of edge e other than v.
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;  // CSR offsets, size n + 1
  std::vector<Incidence> adjacency_;
};

/// A subgraph together with the maps back to the parent's ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;  // subgraph vertex -> parent vertex
  std::vector<EdgeId> parent_edge;    // subgraph edge -> parent edge
};

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);
Subgraph remove_edges(const Graph& g, std::span<const EdgeId> removed);

/// Connected components as a label per vertex (labels 0.., by smallest vertex).
std::vector<int> component_labels(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Row-major n*n distance matrix; -1 for unreachable pairs.
std::vector<int> all_pairs_distances(const Graph& g);

}  // namespace crx
