#include "crx/rainbow_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "crx/errors.hpp"
#include "crx/generators.hpp"
#include "crx/structure.hpp"
#include "cycle_search.hpp"

namespace crx {

namespace {

std::vector<Vertex> normalise_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InvalidParameter("vertex set must be nonempty");
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : out) {
    if (v < 0 || v >= g.order()) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> vertex_bits(int n, std::span<const Vertex> vs) {
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) + 63) / 64, 0);
  for (Vertex v : vs) bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  return bits;
}

bool bits_contain(const std::vector<std::uint64_t>& bits, std::span<const Vertex> s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) {
    return ((bits[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U) != 0;
  });
}

/// Exact search for a rainbow tree containing a required set.
///
/// Grows a tree from the smallest required vertex. Each step attaches a path
/// from the smallest required vertex still outside the tree; every rainbow
/// tree containing the set can be built this way. Failed (tree, colours)
/// states are memoised.
class TreeSearcher {
 public:
  TreeSearcher(const Graph& g, std::span<const Colour> colours, int colour_bound)
      : g_(g),
        colour_(colours),
        in_tree_(static_cast<std::size_t>(g.order()), 0),
        on_path_(static_cast<std::size_t>(g.order()), 0),
        colour_used_(static_cast<std::size_t>(std::max(colour_bound, 1)), 0) {}

  std::optional<TreeWitness> find(std::span<const Vertex> required, NodeMeter& meter) {
    required_.assign(required.begin(), required.end());
    meter_ = &meter;
    failed_.clear();
    tree_edges_.clear();
    in_tree_[required_[0]] = 1;
    bool ok = false;
    try {
      ok = grow();
    } catch (...) {
      reset();
      throw;
    }
    std::optional<TreeWitness> out;
    if (ok) {
      TreeWitness w;
      w.edges = tree_edges_;
      std::sort(w.edges.begin(), w.edges.end());
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (in_tree_[v]) w.vertices.push_back(v);
      }
      out = std::move(w);
    }
    reset();
    return out;
  }

 private:
  static constexpr std::size_t kMemoLimit = 1'000'000;

  void reset() {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(on_path_.begin(), on_path_.end(), 0);
    std::fill(colour_used_.begin(), colour_used_.end(), 0);
    tree_edges_.clear();
    path_.clear();
    path_edges_.clear();
  }

  std::vector<std::uint64_t> state_key() const {
    std::vector<std::uint64_t> key((in_tree_.size() + 63) / 64 + (colour_used_.size() + 63) / 64, 0);
    for (std::size_t v = 0; v < in_tree_.size(); ++v) {
      if (in_tree_[v]) key[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    const std::size_t off = (in_tree_.size() + 63) / 64;
    for (std::size_t c = 0; c < colour_used_.size(); ++c) {
      if (colour_used_[c]) key[off + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    return key;
  }

  bool grow() {
    Vertex next = -1;
    for (Vertex s : required_) {
      if (!in_tree_[s]) {
        next = s;
        break;
      }
    }
    if (next < 0) return true;
    auto key = state_key();
    if (failed_.count(key)) return false;
    path_.push_back(next);
    on_path_[next] = 1;
    bool ok = extend(next);
    on_path_[next] = 0;
    path_.pop_back();
    if (!ok && failed_.size() < kMemoLimit) failed_.insert(std::move(key));
    return ok;
  }

  // Extends the current path (ending at cur, outside the tree) until it touches the tree.
  bool extend(Vertex cur) {
    for (const Incidence& inc : g_.neighbours(cur)) {
      meter_->tick();
      Colour c = colour_[inc.edge];
      if (colour_used_[c] || on_path_[inc.to]) continue;
      colour_used_[c] = 1;
      path_edges_.push_back(inc.edge);
      bool ok;
      if (in_tree_[inc.to]) {
        ok = attach_and_grow();
      } else {
        on_path_[inc.to] = 1;
        path_.push_back(inc.to);
        ok = extend(inc.to);
        path_.pop_back();
        on_path_[inc.to] = 0;
      }
      if (ok) return true;
      path_edges_.pop_back();
      colour_used_[c] = 0;
    }
    return false;
  }

  bool attach_and_grow() {
    // Snapshot the path: grow() reuses path_ for the next attachment.
    std::vector<Vertex> verts = path_;
    std::vector<EdgeId> edges = path_edges_;
    for (Vertex v : verts) {
      on_path_[v] = 0;
      in_tree_[v] = 1;
    }
    tree_edges_.insert(tree_edges_.end(), edges.begin(), edges.end());
    std::vector<Vertex> saved_path;
    std::vector<EdgeId> saved_edges;
    saved_path.swap(path_);
    saved_edges.swap(path_edges_);
    bool ok = grow();
    saved_path.swap(path_);
    saved_edges.swap(path_edges_);
    if (ok) return true;
    tree_edges_.resize(tree_edges_.size() - edges.size());
    for (Vertex v : verts) {
      in_tree_[v] = 0;
      on_path_[v] = 1;
    }
    return false;
  }

  const Graph& g_;
  std::span<const Colour> colour_;
  std::vector<char> in_tree_;
  std::vector<char> on_path_;
  std::vector<char> colour_used_;
  std::vector<Vertex> required_;
  std::vector<Vertex> path_;
  std::vector<EdgeId> path_edges_;
  std::vector<EdgeId> tree_edges_;
  std::set<std::vector<std::uint64_t>> failed_;
  NodeMeter* meter_ = nullptr;
};

}  // namespace

std::optional<CycleWitness> rainbow_cycle_through(const EdgeColouring& c, std::span<const Vertex> s,
                                                  std::uint64_t budget) {
  const Graph& g = c.graph();
  auto req = normalise_set(g, s);
  detail::CycleSearcher searcher(g, c.colours(), c.colour_count());
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  auto found = searcher.find(req, std::min(g.order(), c.colour_count()), meter);
  meter.flush();
  if (!found) return std::nullopt;
  return CycleWitness{std::move(found->vertices), std::move(found->edges)};
}

std::optional<int> min_cycle_length_through(const Graph& g, std::span<const Vertex> s, std::uint64_t budget) {
  auto req = normalise_set(g, s);
  auto colours = detail::identity_colours(g);
  detail::CycleSearcher searcher(g, colours, g.size());
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  auto any = searcher.find(req, g.order(), meter);
  if (!any) return std::nullopt;
  int upper = static_cast<int>(any->vertices.size());
  int lower = std::max<int>(3, static_cast<int>(req.size()));
  const auto& dist = *searcher.distances();
  for (Vertex a : req) {
    for (Vertex b : req) lower = std::max(lower, 2 * dist[static_cast<std::size_t>(a) * g.order() + b]);
  }
  for (int len = lower; len < upper; ++len) {
    if (searcher.find(req, len, meter)) return len;
  }
  meter.flush();
  return upper;
}

VerificationReport verify_k_rainbow_cycle_colouring(const EdgeColouring& c, int k, SearchOptions opts) {
  const Graph& g = c.graph();
  if (k < 1) throw InvalidParameter("k must be positive");
  if (g.order() < k) throw NotInFk("graph has fewer than k vertices");
  if (k <= 2 && !in_family_Fk(g, k)) throw NotInFk("graph is not in F_" + std::to_string(k));

  auto dist = std::make_shared<const std::vector<int>>(all_pairs_distances(g));
  const int max_len = std::min(g.order(), c.colour_count());
  NodeBudget nodes(opts.budget);
  auto scan = detail::scan_subsets(
      g.order(), k,
      [&]() -> detail::SubsetPredicate {
        auto checker = std::make_shared<detail::CoverageChecker>(g, c.colours(), c.colour_count(), max_len, dist);
        return [checker](std::span<const Vertex> s, NodeMeter& m) { return checker->covered(s, m); };
      },
      nodes, opts.threads);

  VerificationReport rep;
  rep.subsets_checked = scan.subsets_checked;
  rep.nodes = scan.nodes;
  if (scan.counterexample) {
    if (k >= 3 && !min_cycle_length_through(g, *scan.counterexample, opts.budget)) {
      throw NotInFk("some " + std::to_string(k) + "-set lies on no cycle");
    }
    rep.status = VerificationStatus::Counterexample;
    rep.bad_set = std::move(scan.counterexample);
  }
  return rep;
}

std::optional<TreeWitness> rainbow_tree_through(const EdgeColouring& c, std::span<const Vertex> s,
                                                std::uint64_t budget) {
  auto req = normalise_set(c.graph(), s);
  TreeSearcher searcher(c.graph(), c.colours(), c.colour_count());
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  auto out = searcher.find(req, meter);
  meter.flush();
  return out;
}

VerificationReport verify_k_rainbow_index_colouring(const EdgeColouring& c, int k, SearchOptions opts) {
  const Graph& g = c.graph();
  if (k < 1) throw InvalidParameter("k must be positive");
  if (g.order() < k) throw InvalidParameter("graph has fewer than k vertices");
  if (!is_connected(g)) throw InvalidParameter("rainbow index needs a connected graph");

  NodeBudget nodes(opts.budget);
  auto scan = detail::scan_subsets(
      g.order(), k,
      [&]() -> detail::SubsetPredicate {
        struct State {
          TreeSearcher searcher;
          std::vector<std::vector<std::uint64_t>> cache;
        };
        auto st = std::make_shared<State>(State{TreeSearcher(g, c.colours(), c.colour_count()), {}});
        return [st, &g](std::span<const Vertex> s, NodeMeter& m) {
          for (std::size_t i = 0; i < st->cache.size(); ++i) {
            if (bits_contain(st->cache[i], s)) {
              std::rotate(st->cache.begin(), st->cache.begin() + static_cast<std::ptrdiff_t>(i),
                          st->cache.begin() + static_cast<std::ptrdiff_t>(i) + 1);
              return true;
            }
          }
          auto w = st->searcher.find(s, m);
          if (!w) return false;
          st->cache.insert(st->cache.begin(), vertex_bits(g.order(), w->vertices));
          if (st->cache.size() > 32) st->cache.pop_back();
          return true;
        };
      },
      nodes, opts.threads);

  VerificationReport rep;
  rep.subsets_checked = scan.subsets_checked;
  rep.nodes = scan.nodes;
  if (scan.counterexample) {
    rep.status = VerificationStatus::Counterexample;
    rep.bad_set = std::move(scan.counterexample);
  }
  return rep;
}

bool is_valid_cycle_witness(const EdgeColouring& c, const CycleWitness& w, std::span<const Vertex> s,
                            bool require_rainbow) {
  const Graph& g = c.graph();
  const std::size_t len = w.vertices.size();
  if (len < 3 || w.edges.size() != len) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> colour_seen(static_cast<std::size_t>(c.colour_count()), 0);
  for (std::size_t i = 0; i < len; ++i) {
    Vertex v = w.vertices[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    auto e = g.edge_between(v, w.vertices[(i + 1) % len]);
    if (!e || *e != w.edges[i]) return false;
    if (require_rainbow) {
      if (colour_seen[c.colour(*e)]) return false;
      colour_seen[c.colour(*e)] = 1;
    }
  }
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 0 && v < g.order() && seen[v]; });
}

bool is_valid_tree_witness(const EdgeColouring& c, const TreeWitness& w, std::span<const Vertex> s,
                           bool require_rainbow) {
  const Graph& g = c.graph();
  if (w.vertices.empty() || w.edges.size() + 1 != w.vertices.size()) return false;
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    Vertex v = w.vertices[i];
    if (v < 0 || v >= g.order() || index[v] >= 0) return false;
    index[v] = static_cast<int>(i);
  }
  // Union-find over tree vertices: |E| = |V| - 1 plus no cycle means a spanning tree of them.
  std::vector<int> parent(w.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> colour_seen(static_cast<std::size_t>(c.colour_count()), 0);
  std::set<EdgeId> distinct;
  for (EdgeId e : w.edges) {
    if (e < 0 || e >= g.size() || !distinct.insert(e).second) return false;
    int a = index[g.edge(e).u];
    int b = index[g.edge(e).v];
    if (a < 0 || b < 0) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
    if (require_rainbow) {
      if (colour_seen[c.colour(e)]) return false;
      colour_seen[c.colour(e)] = 1;
    }
  }
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 0 && v < g.order() && index[v] >= 0; });
}

std::optional<std::vector<Vertex>> colour_class_collision(const EdgeColouring& c, int m, int k, CollisionMode mode) {
  const Graph& g = c.graph();
  const int n = g.order() - m;
  if (m < 1 || n < 1) throw InvalidParameter("class sizes must be positive");
  if (k < 1) throw InvalidParameter("k must be positive");
  if (!(g == complete_bipartite(m, n))) throw InvalidParameter("colouring is not on K_{m,n} in standard labelling");
  if (k > n) return std::nullopt;

  if (mode == CollisionMode::IdenticalVectors) {
    std::map<std::vector<Colour>, std::vector<Vertex>> groups;
    for (int j = 0; j < n; ++j) {
      std::vector<Colour> vec(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) vec[i] = c.colour(i, m + j);
      auto& members = groups[vec];
      members.push_back(m + j);
      if (static_cast<int>(members.size()) == k) return members;
    }
    return std::nullopt;
  }

  const std::size_t words = (static_cast<std::size_t>(c.colour_count()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sets(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      Colour col = c.colour(i, m + j);
      sets[j][static_cast<std::size_t>(col) / 64] |= std::uint64_t{1} << (col % 64);
    }
  }
  NodeBudget nodes;
  NodeMeter meter(nodes);
  std::vector<std::uint64_t> acc(words);
  for (ColexSubsets it(n, k); !it.done(); it.next()) {
    meter.tick();
    std::fill(acc.begin(), acc.end(), 0);
    for (int j : it.current()) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= sets[j][w];
    }
    int count = 0;
    for (std::uint64_t w : acc) count += __builtin_popcountll(w);
    if (count < 2 * k) {
      std::vector<Vertex> out;
      for (int j : it.current()) out.push_back(m + j);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace crx
