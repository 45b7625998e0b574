#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "construct_common.hpp"
#include "crx/generators.hpp"

namespace crx {

std::vector<Vertex> gray_code_cycle(int n) {
  if (n < 2 || n > 24) throw InvalidParameter("Gray code cycle needs 2 <= n <= 24");
  std::vector<Vertex> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i ^ (i >> 1));
  return out;
}

EdgeColouring colour_cube(int n, int k, const ConstructOptions& opts) {
  if (n < 2 || n > 20) throw InvalidParameter("colour_cube needs 2 <= n <= 20");
  const long long order = 1LL << n;
  if (k < 1 || k > order) throw InvalidParameter("colour_cube needs 1 <= k <= 2^n");
  const Graph g = hypercube(n);
  ColouringBuilder b(g);
  int r;
  // Rainbow copies of Q_2 on coordinates 1 and 2 (bits 0 and 1).
  auto base_q2 = [&](Vertex v, int d) { return d == 0 ? ((v >> 1) & 1) : 2 + (v & 1); };

  if (k <= 3) {
    r = k == 1 ? 4 : 2 * n;
    for (const Edge& e : g.edges()) {
      const int d = std::countr_zero(static_cast<unsigned>(e.u ^ e.v));
      Colour c;
      if (d < 2) c = base_q2(e.u, d);
      else if (k == 1) c = 0;
      else c = 2 * d + std::popcount(static_cast<unsigned>(e.u) & ((1U << d) - 1U)) % 2;
      b.set(e.u, e.v, c);
    }
  } else if (2 * static_cast<long long>(k) >= order) {
    r = static_cast<int>(order);
    auto cyc = gray_code_cycle(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) b.set(cyc[i], cyc[(i + 1) % cyc.size()], static_cast<Colour>(i));
    b.fill_unset(0);
  } else {
    throw RegimeUnsupported("colour_cube covers k in {1, 2, 3} or k >= 2^(n-1); use colour_cube_recursive");
  }
  EdgeColouring c = b.finish(r);
  detail::self_verify(c, k, opts, "colour_cube(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return c;
}

namespace {

int cube_edges(int p) { return p * (1 << (p - 1)); }

/// Distinct id of the direction-d edge at v in Q_p.
int rainbow_edge_id(int p, unsigned v, int d) {
  const unsigned low = v & ((1U << d) - 1U);
  const unsigned high = (v >> (d + 1)) << d;
  return d * (1 << (p - 1)) + static_cast<int>(low | high);
}

void check_recursive_params(int n, int K) {
  if (K < 2) throw InvalidParameter("block size K must be at least 2");
  if (n < K) throw InvalidParameter("colour_cube_recursive needs n >= K");
  if (n > 20) throw InvalidParameter("colour_cube_recursive needs n <= 20");
}

int recursive_colour(int p, int K, unsigned v, int d) {
  if (p < 2 * K) return rainbow_edge_id(p, v, d);
  const int q = p - K;
  if (d < q) return recursive_colour(q, K, v & ((1U << q) - 1U), d);
  return cube_recursive_colour_count(q, K) + rainbow_edge_id(K, v >> q, d - q);
}

}  // namespace

int cube_recursive_colour_count(int n, int K) {
  check_recursive_params(n, K);
  if (n < 2 * K) return cube_edges(n);
  return cube_recursive_colour_count(n - K, K) + cube_edges(K);
}

EdgeColouring colour_cube_recursive(int n, int k, int K) {
  if (k < 4) throw InvalidParameter("colour_cube_recursive targets k >= 4");
  const int r = cube_recursive_colour_count(n, K);
  const Graph g = hypercube(n);
  ColouringBuilder b(g);
  for (const Edge& e : g.edges()) {
    const int d = std::countr_zero(static_cast<unsigned>(e.u ^ e.v));
    b.set(e.u, e.v, recursive_colour(n, K, static_cast<unsigned>(e.u), d));
  }
  return b.finish(r);
}

namespace {

WalkWitness recursive_walk(int p, int K, const std::vector<Vertex>& tuple, std::uint64_t budget) {
  const int k = static_cast<int>(tuple.size());
  if (p < 2 * K) {
    auto w = find_subdivided_closed_walk(hypercube(p), tuple, nullptr, budget);
    if (!w) {
      std::string t;
      for (Vertex v : tuple) t += (t.empty() ? "" : ",") + std::to_string(v);
      throw BaseWalkNotFound("Q_" + std::to_string(p) + " has no subdivided closed walk for (" + t + ")");
    }
    return *w;
  }
  const int q = p - K;
  const CubeSplit split(q, K);
  std::vector<Vertex> hat_t, tilde_t;
  for (Vertex v : tuple) {
    hat_t.push_back(static_cast<Vertex>(split.hat(static_cast<unsigned>(v))));
    tilde_t.push_back(static_cast<Vertex>(split.tilde(static_cast<unsigned>(v))));
  }
  const WalkWitness hat_w = recursive_walk(q, K, hat_t, budget);
  const WalkWitness tilde_w = recursive_walk(K, K, tilde_t, budget);
  auto join = [&](Vertex h, Vertex t) {
    return static_cast<Vertex>(split.combine(static_cast<unsigned>(h), static_cast<unsigned>(t)));
  };

  WalkWitness out;
  out.anchor_vertices = tuple;
  for (int i = 0; i < k; ++i) {
    const Vertex a = tuple[i], b = tuple[(i + 1) % k];
    std::vector<Vertex> path;
    if (a == b) {
      path = {a};
    } else if (hat_t[i] == hat_t[(i + 1) % k]) {
      for (Vertex t : tilde_w.paths[i]) path.push_back(join(hat_t[i], t));
    } else {
      // L' from a to the copy of u, then M across layers, then L'' to b.
      const auto& L = hat_w.paths[i];
      const Vertex u = L[1];
      path.push_back(join(L[0], tilde_t[i]));
      path.push_back(join(u, tilde_t[i]));
      const auto& M = tilde_w.paths[i];
      for (std::size_t x = 1; x < M.size(); ++x) path.push_back(join(u, M[x]));
      for (std::size_t x = 2; x < L.size(); ++x) path.push_back(join(L[x], tilde_t[(i + 1) % k]));
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

}  // namespace

WalkWitness cube_recursive_walk(int n, int K, std::span<const Vertex> tuple, std::uint64_t budget) {
  check_recursive_params(n, K);
  if (tuple.empty()) throw InvalidParameter("walk tuple must be nonempty");
  for (Vertex v : tuple) {
    if (v < 0 || v >= (1 << n)) throw InvalidParameter("tuple vertex out of range");
  }
  return recursive_walk(n, K, std::vector<Vertex>(tuple.begin(), tuple.end()), budget);
}

namespace {

class WalkSearch {
 public:
  WalkSearch(const Graph& g, std::span<const Vertex> tuple, const EdgeColouring* colouring, NodeMeter& meter)
      : g_(g),
        tuple_(tuple.begin(), tuple.end()),
        colouring_(colouring),
        meter_(meter),
        dist_(all_pairs_distances(g)),
        blocked_(static_cast<std::size_t>(g.order()), 0),
        colour_used_(colouring ? static_cast<std::size_t>(colouring->colour_count()) : 0, 0) {
    for (Vertex v : tuple_) blocked_[v] = 1;
  }

  std::optional<WalkWitness> run() {
    const int k = static_cast<int>(tuple_.size());
    need_after_.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int i = k - 1; i >= 0; --i) {
      Vertex a = tuple_[i], b = tuple_[(i + 1) % k];
      if (a != b && dist(a, b) < 0) return std::nullopt;
      need_after_[i] = need_after_[i + 1] + (a == b ? 0 : std::max(2, dist(a, b)));
    }
    paths_.assign(static_cast<std::size_t>(k), {});
    // Total walk length; a rainbow walk cannot be longer than the colour count.
    int longest = g_.order();
    if (colouring_) longest = std::min(longest, colouring_->colour_count());
    for (limit_ = need_after_[0]; limit_ <= longest; ++limit_) {
      used_ = 0;
      if (solve(0)) {
        WalkWitness w;
        w.anchor_vertices = tuple_;
        w.paths = paths_;
        return w;
      }
    }
    return std::nullopt;
  }

 private:
  int dist(Vertex a, Vertex b) const { return dist_[static_cast<std::size_t>(a) * g_.order() + b]; }

  bool solve(int i) {
    const int k = static_cast<int>(tuple_.size());
    if (i == k) return true;
    const Vertex a = tuple_[i], b = tuple_[(i + 1) % k];
    if (a == b) {
      paths_[i] = {a};
      return solve(i + 1);
    }
    if (!later_reachable(i)) return false;
    paths_[i] = {a};
    return extend(i, a, b);
  }

  /// Every remaining pair (from path i on) is still joined in the graph minus the blocked vertices.
  bool later_reachable(int i) {
    const int k = static_cast<int>(tuple_.size());
    for (int j = i; j < k; ++j) {
      Vertex a = tuple_[j], b = tuple_[(j + 1) % k];
      if (a == b) continue;
      seen_.assign(static_cast<std::size_t>(g_.order()), 0);
      queue_.assign(1, a);
      seen_[a] = 1;
      bool hit = false;
      for (std::size_t h = 0; h < queue_.size() && !hit; ++h) {
        for (const Incidence& inc : g_.neighbours(queue_[h])) {
          if (inc.to == b) {
            hit = true;
            break;
          }
          if (blocked_[inc.to] || seen_[inc.to]) continue;
          seen_[inc.to] = 1;
          queue_.push_back(inc.to);
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  bool extend(int i, Vertex cur, Vertex target) {
    auto& path = paths_[i];
    const int len = static_cast<int>(path.size()) - 1;
    for (const Incidence& inc : g_.neighbours(cur)) {
      meter_.tick();
      const Vertex w = inc.to;
      Colour c = colouring_ ? colouring_->colour(inc.edge) : 0;
      if (colouring_ && colour_used_[c]) continue;
      if (w == target) {
        if (len + 1 < 2 || used_ + 1 + need_after_[i + 1] > limit_) continue;
        if (colouring_) colour_used_[c] = 1;
        ++used_;
        path.push_back(w);
        if (solve(i + 1)) return true;
        path.pop_back();
        --used_;
        if (colouring_) colour_used_[c] = 0;
        continue;
      }
      const int rest = std::max(dist(w, target), len + 1 == 1 ? 1 : 0);
      if (blocked_[w] || used_ + 1 + rest + need_after_[i + 1] > limit_) continue;
      blocked_[w] = 1;
      if (colouring_) colour_used_[c] = 1;
      ++used_;
      path.push_back(w);
      if (extend(i, w, target)) return true;
      path.pop_back();
      --used_;
      if (colouring_) colour_used_[c] = 0;
      blocked_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> tuple_;
  const EdgeColouring* colouring_;
  NodeMeter& meter_;
  std::vector<int> dist_;
  std::vector<char> blocked_;
  std::vector<char> colour_used_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<int> need_after_;  // minimum length of paths i.. k-1
  std::vector<char> seen_;
  std::vector<Vertex> queue_;
  int limit_ = 0;
  int used_ = 0;
};

}  // namespace

std::optional<WalkWitness> find_subdivided_closed_walk(const Graph& g, std::span<const Vertex> tuple,
                                                       const EdgeColouring* colouring, std::uint64_t budget) {
  if (tuple.empty()) throw InvalidParameter("walk tuple must be nonempty");
  for (Vertex v : tuple) {
    if (v < 0 || v >= g.order()) throw InvalidParameter("tuple vertex out of range");
  }
  if (colouring && !(colouring->graph() == g)) throw InvalidParameter("colouring belongs to another graph");
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  WalkSearch search(g, tuple, colouring, meter);
  auto out = search.run();
  meter.flush();
  return out;
}

bool is_valid_walk(const Graph& g, const WalkWitness& w, const EdgeColouring* colouring) {
  const std::size_t k = w.anchor_vertices.size();
  if (k == 0 || w.paths.size() != k) return false;
  std::vector<int> internal_owner(static_cast<std::size_t>(g.order()), -1);
  std::set<Colour> colours;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = w.paths[i];
    const Vertex a = w.anchor_vertices[i], b = w.anchor_vertices[(i + 1) % k];
    if (p.empty() || p.front() != a || p.back() != b) return false;
    if (a == b) {
      if (p.size() != 1) return false;
      continue;
    }
    if (p.size() < 3) return false;
    std::set<Vertex> on(p.begin(), p.end());
    if (on.size() != p.size()) return false;
    for (std::size_t x = 0; x + 1 < p.size(); ++x) {
      auto e = g.edge_between(p[x], p[x + 1]);
      if (!e) return false;
      if (colouring && !colours.insert(colouring->colour(*e)).second) return false;
    }
    for (std::size_t x = 1; x + 1 < p.size(); ++x) {
      if (internal_owner[p[x]] >= 0) return false;
      internal_owner[p[x]] = static_cast<int>(i);
    }
  }
  return true;
}

}  // namespace crx
