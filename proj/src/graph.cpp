#include "crx/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "crx/errors.hpp"

namespace crx {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw InvalidParameter("graph order must be nonnegative");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidParameter("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw InvalidParameter("loop at vertex " + std::to_string(a));
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidParameter("duplicate edge");
  }

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = Incidence{e.v, id};
    adjacency_[fill[e.v]++] = Incidence{e.u, id};
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Incidence& x, const Incidence& y) { return x.to < y.to; });
  }
}

std::span<const Incidence> Graph::neighbours(Vertex v) const {
  return std::span<const Incidence>(adjacency_.data() + offsets_[v],
                                    static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]));
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  auto nb = neighbours(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b, [](const Incidence& x, Vertex t) { return x.to < t; });
  if (it != nb.end() && it->to == b) return it->edge;
  return std::nullopt;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = 1;
  Subgraph sub;
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) {
      index[v] = static_cast<int>(sub.parent_vertex.size());
      sub.parent_vertex.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> kept;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (!gone[ed.u] && !gone[ed.v]) {
      kept.emplace_back(index[ed.u], index[ed.v]);
      sub.parent_edge.push_back(e);
    }
  }
  // Relabelling is monotone, so canonical order (and hence parent_edge order) is preserved.
  sub.graph = Graph(static_cast<int>(sub.parent_vertex.size()), kept);
  return sub;
}

Subgraph remove_edges(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId e : removed) gone.at(static_cast<std::size_t>(e)) = 1;
  Subgraph sub;
  sub.parent_vertex.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) sub.parent_vertex[v] = v;
  std::vector<std::pair<int, int>> kept;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!gone[e]) {
      kept.emplace_back(g.edge(e).u, g.edge(e).v);
      sub.parent_edge.push_back(e);
    }
  }
  sub.graph = Graph(g.order(), kept);
  return sub;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbours(x)) {
        if (label[inc.to] < 0) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (const Incidence& inc : g.neighbours(x)) {
      if (dist[inc.to] < 0) {
        dist[inc.to] = dist[x] + 1;
        q.push(inc.to);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> d(n * n, -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return d;
}

}  // namespace crx
