#include "crx/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "cycle_search.hpp"

namespace crx {

namespace {

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbours(x)) {
      if (!removed[inc.to] && !seen[inc.to]) {
        seen[inc.to] = 1;
        ++reached;
        stack.push_back(inc.to);
      }
    }
  }
  return reached == alive;
}

/// Number of internally vertex-disjoint s-t paths, stopping once `enough` are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int enough) {
  // Node-split network: v_in = 2v, v_out = 2v + 1.
  struct Arc {
    int to;
    int cap;
  };
  const int nodes = 2 * g.order();
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nodes));
  auto add = [&](int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = g.order() + 1;
  for (Vertex v = 0; v < g.order(); ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const Edge& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, big);
    add(2 * e.v + 1, 2 * e.u, big);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> via(static_cast<std::size_t>(nodes));
  while (flow < enough) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> q;
    q.push(source);
    via[source] = -2;
    while (!q.empty() && via[sink] == -1) {
      int x = q.front();
      q.pop();
      for (int a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      int a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> raw_blocks;
  int timer = 0;

  std::function<void(Vertex, EdgeId)> dfs = [&](Vertex u, EdgeId parent_edge) {
    disc[u] = low[u] = timer++;
    for (const Incidence& inc : g.neighbours(u)) {
      if (inc.edge == parent_edge) continue;
      Vertex w = inc.to;
      if (disc[w] == -1) {
        edge_stack.push_back(inc.edge);
        dfs(w, inc.edge);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<EdgeId> block;
          EdgeId top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
          } while (top != inc.edge);
          raw_blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        edge_stack.push_back(inc.edge);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }

  BlockDecomposition dec;
  for (auto& edges : raw_blocks) {
    std::sort(edges.begin(), edges.end());
    Block b;
    b.edges = edges;
    for (EdgeId e : edges) {
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    dec.blocks.push_back(std::move(b));
  }
  std::sort(dec.blocks.begin(), dec.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) dec.blocks.push_back(Block{{}, {v}});
  }

  std::vector<int> membership(static_cast<std::size_t>(n), 0);
  for (const Block& b : dec.blocks) {
    for (Vertex v : b.vertices) ++membership[v];
  }
  std::vector<int> cut_index(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] >= 2) {
      cut_index[v] = static_cast<int>(dec.cut_vertices.size());
      dec.cut_vertices.push_back(v);
    }
  }
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    for (Vertex v : dec.blocks[b].vertices) {
      if (cut_index[v] >= 0) dec.block_cut_tree.emplace_back(b, cut_index[v]);
    }
  }
  return dec;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  auto dec = block_decomposition(g);
  return dec.blocks.size() == 1 && static_cast<int>(dec.blocks[0].vertices.size()) == g.order();
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) throw InvalidParameter("connectivity k must be positive");
  const int n = g.order();
  if (n <= k) return false;
  if (k == 1) return is_connected(g);
  if (k == 2) return is_two_connected(g);
  if (n <= 20) {
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (ColexSubsets it(n, k - 1); !it.done(); it.next()) {
      for (Vertex v : it.current()) removed[v] = 1;
      bool ok = connected_without(g, removed);
      for (Vertex v : it.current()) removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  }
  // Menger: some separator of size < k misses one of the first k vertices.
  if (!is_connected(g)) return false;
  for (Vertex s = 0; s < k; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      if (local_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

bool is_minimally_2_connected(const Graph& g) {
  if (!is_two_connected(g)) return false;
  for (EdgeId e = 0; e < g.size(); ++e) {
    EdgeId removed[] = {e};
    if (is_two_connected(remove_edges(g, removed).graph)) return false;
  }
  return true;
}

namespace {

/// Lexicographically least shortest cycle through s, or empty if none.
std::vector<Vertex> least_shortest_cycle_through(const Graph& g, Vertex s) {
  const auto dist = bfs_distances(g, s);
  const int n = g.order();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> path{s};
  on[s] = 1;
  int target = 0;
  std::function<bool(Vertex, int)> dfs = [&](Vertex cur, int len) -> bool {
    for (const Incidence& inc : g.neighbours(cur)) {
      Vertex w = inc.to;
      if (w == s) {
        if (len + 1 == target && len + 1 >= 3) return true;
        continue;
      }
      if (on[w] || dist[w] < 0 || len + 1 + dist[w] > target) continue;
      on[w] = 1;
      path.push_back(w);
      if (dfs(w, len + 1)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  for (target = 3; target <= n; ++target) {
    if (dfs(s, 0)) return path;
  }
  return {};
}

}  // namespace

EarDecomposition ear_decomposition(const Graph& g) {
  if (!is_two_connected(g)) throw NotTwoConnected("ear decomposition needs a 2-connected graph");
  const int n = g.order();
  EarDecomposition dec;
  dec.initial_cycle = least_shortest_cycle_through(g, 0);

  std::vector<char> in_h(static_cast<std::size_t>(n), 0);
  std::vector<char> edge_in_h(static_cast<std::size_t>(g.size()), 0);
  const auto& cyc = dec.initial_cycle;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    in_h[cyc[i]] = 1;
    edge_in_h[*g.edge_between(cyc[i], cyc[(i + 1) % cyc.size()])] = 1;
  }
  int built = static_cast<int>(cyc.size());

  for (;;) {
    EdgeId next = -1;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (!edge_in_h[e] && (in_h[g.edge(e).u] || in_h[g.edge(e).v])) {
        next = e;
        break;
      }
    }
    if (next < 0) break;
    Vertex a = in_h[g.edge(next).u] ? g.edge(next).u : g.edge(next).v;
    Vertex b = g.other(next, a);
    std::vector<Vertex> ear{a, b};
    if (!in_h[b]) {
      // BFS from b through unbuilt vertices until an already-built vertex other than a.
      std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
      std::queue<Vertex> q;
      q.push(b);
      parent[b] = b;
      Vertex hit = -1;
      while (!q.empty() && hit < 0) {
        Vertex x = q.front();
        q.pop();
        for (const Incidence& inc : g.neighbours(x)) {
          Vertex y = inc.to;
          if (y == a || parent[y] != -1) continue;
          parent[y] = x;
          if (in_h[y]) {
            hit = y;
            break;
          }
          q.push(y);
        }
      }
      if (hit < 0) throw NotTwoConnected("no ear closes; graph is not 2-connected");
      std::vector<Vertex> tail;
      for (Vertex x = hit; x != b; x = parent[x]) tail.push_back(x);
      ear.insert(ear.end(), tail.rbegin(), tail.rend());
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      edge_in_h[*g.edge_between(ear[i], ear[i + 1])] = 1;
      in_h[ear[i]] = in_h[ear[i + 1]] = 1;
    }
    built += static_cast<int>(ear.size()) - 2;
    dec.ears.push_back(std::move(ear));
  }
  if (built != n) throw NotTwoConnected("ear decomposition did not reach every vertex");
  return dec;
}

std::vector<EdgeId> replay_ears(const Graph& g, const EarDecomposition& dec) {
  const int n = g.order();
  std::vector<char> in_h(static_cast<std::size_t>(n), 0);
  std::set<EdgeId> used;
  auto take_edge = [&](Vertex x, Vertex y) {
    auto e = g.edge_between(x, y);
    if (!e) throw InvalidParameter("decomposition uses a non-edge");
    if (!used.insert(*e).second) throw InvalidParameter("decomposition uses an edge twice");
  };
  const auto& cyc = dec.initial_cycle;
  if (cyc.size() < 3) throw InvalidParameter("initial cycle too short");
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (in_h[cyc[i]]) throw InvalidParameter("initial cycle repeats a vertex");
    in_h[cyc[i]] = 1;
    take_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  for (const auto& ear : dec.ears) {
    if (ear.size() < 2) throw InvalidParameter("trivial ear");
    if (!in_h[ear.front()] || !in_h[ear.back()] || ear.front() == ear.back()) {
      throw InvalidParameter("ear endpoints must be distinct built vertices");
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      if (in_h[ear[i]]) throw InvalidParameter("ear is not internally disjoint");
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      take_edge(ear[i], ear[i + 1]);
      in_h[ear[i]] = 1;
    }
  }
  return {used.begin(), used.end()};
}

bool in_family_Fk(const Graph& g, int k, std::uint64_t budget) {
  if (k <= 0) throw InvalidParameter("F_k needs k >= 1");
  if (g.order() < k) return false;
  if (k == 1) {
    if (g.order() == 0) return false;
    auto dec = block_decomposition(g);
    std::vector<char> good(static_cast<std::size_t>(g.order()), 0);
    for (const Block& b : dec.blocks) {
      if (b.is_two_connected()) {
        for (Vertex v : b.vertices) good[v] = 1;
      }
    }
    return std::all_of(good.begin(), good.end(), [](char c) { return c != 0; });
  }
  if (!is_two_connected(g)) return false;
  if (k == 2) return true;

  auto colours = detail::identity_colours(g);
  auto dist = std::make_shared<const std::vector<int>>(all_pairs_distances(g));
  NodeBudget nodes(budget);
  auto scan = detail::scan_subsets(
      g.order(), k,
      [&]() -> detail::SubsetPredicate {
        auto checker = std::make_shared<detail::CoverageChecker>(g, colours, g.size(), g.order(), dist);
        return [checker](std::span<const Vertex> s, NodeMeter& m) { return checker->covered(s, m); };
      },
      nodes, 1);
  return !scan.counterexample.has_value();
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<EdgeId> via(static_cast<std::size_t>(n));
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[r] = 0;
    via[r] = -1;
    q.push(r);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[x] + 1 >= best) break;
      for (const Incidence& inc : g.neighbours(x)) {
        if (inc.edge == via[x]) continue;
        if (dist[inc.to] < 0) {
          dist[inc.to] = dist[x] + 1;
          via[inc.to] = inc.edge;
          q.push(inc.to);
        } else {
          int len = dist[x] + dist[inc.to] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<std::vector<Vertex>> hamilton_cycle(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  auto colours = detail::identity_colours(g);
  detail::CycleSearcher searcher(g, colours, g.size());
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  auto found = searcher.find(all, n, meter);
  meter.flush();
  if (!found) return std::nullopt;
  return found->vertices;
}

namespace {

/// Longest cycle length by anchored DFS with a counting bound; `best` is updated in place.
void longest_cycle(const Graph& g, int& best, NodeMeter& meter) {
  const int n = g.order();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  Vertex start = 0;
  std::function<void(Vertex, int, int)> dfs = [&](Vertex cur, int len, int free_above) {
    for (const Incidence& inc : g.neighbours(cur)) {
      meter.tick();
      Vertex w = inc.to;
      if (w == start) {
        if (len + 1 >= 3 && len + 1 > best) best = len + 1;
        continue;
      }
      if (w < start || on[w]) continue;
      if (len + 1 + free_above <= best) continue;  // even visiting every free vertex cannot beat best
      on[w] = 1;
      dfs(w, len + 1, free_above - 1);
      on[w] = 0;
      if (best == n) return;
    }
  };
  for (start = 0; start < n && n - start > best; ++start) {
    on[start] = 1;
    dfs(start, 0, n - start - 1);
    on[start] = 0;
  }
}

}  // namespace

GraphInvariants graph_invariants(const Graph& g, std::uint64_t budget) {
  GraphInvariants inv;
  inv.girth = girth(g);
  if (!inv.girth) return inv;
  inv.circumference = *inv.girth;
  try {
    if (hamilton_cycle(g, budget)) {
      inv.is_hamiltonian = true;
      inv.circumference = g.order();
      return inv;
    }
    NodeBudget nodes(budget);
    NodeMeter meter(nodes);
    int best = *inv.girth;
    try {
      longest_cycle(g, best, meter);
      meter.flush();
    } catch (const BudgetExceeded& e) {
      inv.circumference = best;
      throw InvariantsBudgetExceeded(e, inv, true);
    }
    inv.circumference = best;
  } catch (const InvariantsBudgetExceeded&) {
    throw;
  } catch (const BudgetExceeded& e) {
    throw InvariantsBudgetExceeded(e, inv, true);
  }
  return inv;
}

bool is_hypohamiltonian(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3) throw InvalidParameter("hypohamiltonicity needs n >= 3");
  if (hamilton_cycle(g, budget)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    Vertex removed[] = {v};
    if (!hamilton_cycle(remove_vertices(g, removed).graph, budget)) return false;
  }
  return true;
}

std::vector<std::vector<EdgeId>> all_cycles(const Graph& g, std::uint64_t budget) {
  std::vector<std::vector<EdgeId>> out;
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  detail::for_each_cycle(
      g,
      [&](const detail::FoundCycle& c) {
        out.push_back(c.edges);
        return true;
      },
      meter);
  meter.flush();
  return out;
}

}  // namespace crx
