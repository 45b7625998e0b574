#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "construct_common.hpp"
#include "crx/generators.hpp"
#include "crx/structure.hpp"
#include "cycle_search.hpp"

namespace crx {

namespace {

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

/// Shortest a-b path (BFS, ascending neighbours) as edge ids, avoiding removed edges and vertices.
std::vector<EdgeId> bfs_path_edges(const Graph& g, Vertex a, Vertex b, const std::vector<char>& edge_removed,
                                   const std::vector<char>& vertex_removed) {
  std::vector<EdgeId> via(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty() && !seen[b]) {
    Vertex x = q.front();
    q.pop();
    for (const Incidence& inc : g.neighbours(x)) {
      if (edge_removed[inc.edge] || vertex_removed[inc.to] || seen[inc.to]) continue;
      seen[inc.to] = 1;
      via[inc.to] = inc.edge;
      q.push(inc.to);
    }
  }
  if (!seen[b]) throw InvalidParameter("no path between ear endpoints");
  std::vector<EdgeId> path;
  for (Vertex x = b; x != a; x = g.other(via[x], x)) path.push_back(via[x]);
  return path;
}

}  // namespace

EdgeColouring colour_save_one_crx1(const Graph& g, const ConstructOptions& opts) {
  if (g.order() < 3) throw InvalidParameter("colour_save_one_crx1 needs n >= 3");
  if (is_cycle_graph(g)) throw IsCycle("a cycle needs e(G) colours for k = 1");
  if (!in_family_Fk(g, 1)) throw NotInF1("some vertex lies on no cycle");

  std::vector<Colour> labels(static_cast<std::size_t>(g.size()));
  if (is_two_connected(g)) {
    const EarDecomposition dec = ear_decomposition(g);
    const auto& ear = dec.ears.back();  // at least one ear, since g is not a cycle
    const EdgeId e = *g.edge_between(ear[0], ear[1]);
    std::vector<char> edge_removed(static_cast<std::size_t>(g.size()), 0);
    std::vector<char> vertex_removed(static_cast<std::size_t>(g.order()), 0);
    std::vector<EdgeId> ear_edges;
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      EdgeId x = *g.edge_between(ear[i], ear[i + 1]);
      ear_edges.push_back(x);
      edge_removed[x] = 1;
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) vertex_removed[ear[i]] = 1;
    const auto other_path = bfs_path_edges(g, ear.front(), ear.back(), edge_removed, vertex_removed);

    Colour next = 0;
    for (EdgeId x = 0; x < g.size(); ++x) {
      if (x != e) labels[x] = next++;
    }
    std::vector<char> on_cycle(static_cast<std::size_t>(g.size()), 0);
    for (EdgeId x : ear_edges) on_cycle[labels[x]] = x != e;
    for (EdgeId x : other_path) on_cycle[labels[x]] = 1;
    Colour pick = 0;
    while (on_cycle[pick]) ++pick;
    labels[e] = pick;
  } else {
    const BlockDecomposition dec = block_decomposition(g);
    for (EdgeId x = 0; x < g.size(); ++x) labels[x] = x;
    labels[dec.blocks[1].edges.front()] = labels[dec.blocks[0].edges.front()];
  }
  EdgeColouring c = EdgeColouring::compacted(g, labels);
  detail::self_verify(c, 1, opts, "colour_save_one_crx1");
  return c;
}

EdgeColouring colour_save_one_crx2(const Graph& g, const ConstructOptions& opts) {
  if (!is_two_connected(g)) throw NotTwoConnected("colour_save_one_crx2 needs a 2-connected graph");
  EdgeId spare = -1;
  for (EdgeId e = 0; e < g.size() && spare < 0; ++e) {
    EdgeId removed[] = {e};
    if (is_two_connected(remove_edges(g, removed).graph)) spare = e;
  }
  if (spare < 0) throw MinimallyTwoConnected("every edge is needed for 2-connectivity");
  std::vector<Colour> labels(static_cast<std::size_t>(g.size()));
  for (EdgeId x = 0; x < g.size(); ++x) labels[x] = x;
  labels[spare] = spare == 0 ? 1 : 0;
  EdgeColouring c = EdgeColouring::compacted(g, labels);
  detail::self_verify(c, 2, opts, "colour_save_one_crx2");
  return c;
}

EdgeColouring colour_join_rxk(int k, int t, const ConstructOptions& opts) {
  if (k < 2) throw InvalidParameter("colour_join_rxk needs k >= 2; rx_1 is 0 by convention");
  const Graph g = path_cycle_join(k, t);
  const int len = k * t;
  auto u = [](int j) { return j; };
  auto v = [k, len](int i) { return k - 1 + ((i % len) + len) % len; };
  ColouringBuilder b(g);
  for (int j = 0; j <= k - 2; ++j)
    for (int i = 0; i < len; ++i) b.set(u(j), v(i), i % k + j * k);
  for (int j = 0; j <= k - 3; ++j) b.set(u(j), u(j + 1), k * k - k + j);
  for (int i = 0; i < len; ++i) b.set(v(i), v(i + 1), k * k - 2);
  EdgeColouring c = b.finish(k * k - 1);
  if (opts.verify) {
    auto rep = verify_k_rainbow_index_colouring(c, k, SearchOptions{opts.budget, opts.threads});
    if (!rep.certified()) throw ConstructionRejected("colour_join_rxk: some k-set has no rainbow tree");
  }
  return c;
}

namespace {

/// Every cycle through both a and b uses every edge in `required`.
bool every_cycle_uses(const Graph& g, Vertex a, Vertex b, std::span<const EdgeId> required) {
  NodeBudget budget;
  NodeMeter meter(budget);
  bool ok = true;
  detail::for_each_cycle(
      g,
      [&](const detail::FoundCycle& c) {
        bool has_a = std::find(c.vertices.begin(), c.vertices.end(), a) != c.vertices.end();
        bool has_b = std::find(c.vertices.begin(), c.vertices.end(), b) != c.vertices.end();
        if (!has_a || !has_b) return true;
        for (EdgeId e : required) {
          if (std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end()) {
            ok = false;
            return false;
          }
        }
        return true;
      },
      meter);
  return ok;
}

/// Blocks of h - removed ordered along their chain, starting at the block holding `start`.
/// In a minimally 2-connected graph these blocks form a path in the block-cut tree.
struct Chain {
  std::vector<Block> blocks;  // in chain order
  std::vector<Vertex> cuts;   // cuts[i] joins blocks[i] and blocks[i + 1]
};

Chain block_chain(const Graph& h, Vertex start) {
  const BlockDecomposition dec = block_decomposition(h);
  const int nb = static_cast<int>(dec.blocks.size());
  auto contains = [](const Block& b, Vertex v) { return std::binary_search(b.vertices.begin(), b.vertices.end(), v); };
  Chain chain;
  std::vector<char> used(static_cast<std::size_t>(nb), 0);
  int cur = -1;
  for (int i = 0; i < nb; ++i) {
    if (contains(dec.blocks[i], start)) cur = i;
  }
  Vertex entry = -1;
  while (cur >= 0) {
    used[cur] = 1;
    chain.blocks.push_back(dec.blocks[cur]);
    int next = -1;
    for (Vertex x : dec.cut_vertices) {
      if (x == entry || !contains(dec.blocks[cur], x)) continue;
      for (int j = 0; j < nb; ++j) {
        if (!used[j] && contains(dec.blocks[j], x)) {
          next = j;
          entry = x;
        }
      }
      if (next >= 0) break;
    }
    if (next >= 0) chain.cuts.push_back(entry);
    cur = next;
  }
  return chain;
}

}  // namespace

std::pair<Vertex, Vertex> minimal_2conn_obstruction(const Graph& g, EdgeId e, EdgeId e2) {
  if (e == e2 || e < 0 || e2 < 0 || e >= g.size() || e2 >= g.size()) {
    throw InvalidParameter("obstruction needs two distinct edges of the graph");
  }
  if (!is_minimally_2_connected(g)) throw InvalidParameter("graph is not minimally 2-connected");
  const EdgeId required[] = {e, e2};

  EdgeId removed[] = {e};
  const Graph h = remove_edges(g, removed).graph;  // same vertex ids; edge ids shift
  auto edge_in = [&](const Block& b, EdgeId parent) {
    const Edge& pe = g.edge(parent);
    auto he = h.edge_between(pe.u, pe.v);
    return he && std::binary_search(b.edges.begin(), b.edges.end(), *he);
  };

  // Orient the chain so that e2 does not lie in the first block.
  Vertex x0 = g.edge(e).u, xp = g.edge(e).v;
  Chain chain = block_chain(h, x0);
  if (edge_in(chain.blocks.front(), e2)) {
    std::swap(x0, xp);
    chain = block_chain(h, x0);
  }
  const int p = static_cast<int>(chain.blocks.size());
  int ell = -1;
  for (int i = 0; i < p; ++i) {
    if (edge_in(chain.blocks[i], e2)) ell = i;
  }
  // x_i in 0-based chain terms: x(0) = x0, x(i) = cuts[i-1], x(p) = xp.
  auto x = [&](int i) { return i == 0 ? x0 : (i == p ? xp : chain.cuts[i - 1]); };

  std::vector<std::pair<Vertex, Vertex>> candidates;
  const Block& bl = chain.blocks[ell];
  if (bl.is_bridge()) {
    candidates.emplace_back(x0, x(ell + 1));
  } else {
    // Sub-chain of B_ell - e2, inside the block's own vertex ids.
    std::vector<std::pair<int, int>> sub_edges;
    for (EdgeId he : bl.edges) {
      const Edge& ed = h.edge(he);
      if (!(ed == g.edge(e2))) sub_edges.emplace_back(ed.u, ed.v);
    }
    const Graph sub(g.order(), sub_edges);
    for (int flip = 0; flip < 2; ++flip) {
      const Vertex y0 = flip ? g.edge(e2).v : g.edge(e2).u;
      const Vertex yq = flip ? g.edge(e2).u : g.edge(e2).v;
      const Chain d = block_chain(sub, y0);
      const int q = static_cast<int>(d.blocks.size());
      auto in_d = [&](int j, Vertex v) {
        return std::binary_search(d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(), v);
      };
      for (int s = 0; s < q; ++s) {
        for (int t = s; t < q; ++t) {
          if (!in_d(s, x(ell)) || !in_d(t, x(ell + 1))) continue;
          if (t < q - 1) candidates.emplace_back(x0, yq);
          if (s > 0) candidates.emplace_back(x0, y0);
        }
      }
    }
  }
  for (auto [a, b] : candidates) {
    if (every_cycle_uses(g, a, b, required)) return {a, b};
  }
  throw ConstructionRejected("block-chain analysis produced no validated obstruction pair");
}

Vertex petersen_pair_obstruction(EdgeId e, EdgeId e2) {
  const Graph g = petersen();
  if (e == e2 || e < 0 || e2 < 0 || e >= g.size() || e2 >= g.size()) {
    throw InvalidParameter("obstruction needs two distinct Petersen edges");
  }
  const Edge a = g.edge(e), b = g.edge(e2);
  auto in_edges = [&](Vertex v) { return v == a.u || v == a.v || v == b.u || v == b.v; };
  Vertex chosen = -1;
  Vertex shared = (a.u == b.u || a.u == b.v) ? a.u : ((a.v == b.u || a.v == b.v) ? a.v : -1);
  if (shared >= 0) {
    for (const Incidence& inc : g.neighbours(shared)) {
      if (!in_edges(inc.to)) chosen = inc.to;
    }
  } else {
    for (Vertex v = 0; v < g.order() && chosen < 0; ++v) {
      if (in_edges(v)) continue;
      bool touches_a = g.adjacent(v, a.u) || g.adjacent(v, a.v);
      bool touches_b = g.adjacent(v, b.u) || g.adjacent(v, b.v);
      if (touches_a && touches_b) chosen = v;
    }
  }
  if (chosen < 0) throw ConstructionRejected("no vertex matches the obstruction rule");

  Vertex removed[] = {chosen};
  const Subgraph sub = remove_vertices(g, removed);
  NodeBudget budget;
  NodeMeter meter(budget);
  bool ok = true;
  detail::for_each_cycle(
      sub.graph,
      [&](const detail::FoundCycle& c) {
        if (static_cast<int>(c.vertices.size()) != sub.graph.order()) return true;
        bool has_a = false, has_b = false;
        for (EdgeId x : c.edges) {
          has_a |= sub.parent_edge[x] == e;
          has_b |= sub.parent_edge[x] == e2;
        }
        ok = has_a && has_b;
        return ok;
      },
      meter);
  if (!ok) throw ConstructionRejected("a Hamilton cycle of P - v avoids one of the edges");
  return chosen;
}

}  // namespace crx
