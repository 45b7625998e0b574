#include "crx/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "construct_common.hpp"
#include "crx/constructions.hpp"
#include "crx/generators.hpp"
#include "crx/rainbow_search.hpp"
#include "crx/structure.hpp"
#include "cycle_search.hpp"

namespace crx {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

/// completions[rem][m]: restricted-growth tails of length rem that start with
/// m colours in use and finish with exactly r.
std::vector<std::vector<std::uint64_t>> completion_table(int edges, int r) {
  std::vector<std::vector<std::uint64_t>> f(static_cast<std::size_t>(edges) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(r) + 2, 0));
  f[0][r] = 1;
  for (int rem = 1; rem <= edges; ++rem) {
    for (int m = 0; m <= r; ++m) {
      std::uint64_t v = sat_mul(static_cast<std::uint64_t>(m), f[rem - 1][m]);
      if (m < r) v = sat_add(v, f[rem - 1][m + 1]);
      f[rem][m] = v;
    }
  }
  return f;
}

enum class Target { Cycles, Trees };

/// Depth-first walk over restricted-growth colourings with exactly r colours.
///
/// Unassigned edges hold fresh colours r, r+1, .. so a partial colouring is a
/// relaxation of all its completions. A k-set that already failed at some leaf
/// (a "killer") prunes a subtree when it has no rainbow cycle of length <= r
/// even in the relaxation. No completion can then succeed.
class Enumerator {
 public:
  Enumerator(const Graph& g, int k, int r, Target target, NodeBudget& budget,
             std::shared_ptr<const std::vector<int>> dist)
      : g_(g),
        k_(k),
        r_(r),
        e_(g.size()),
        target_(target),
        budget_(budget),
        meter_(budget),
        dist_(std::move(dist)),
        work_(static_cast<std::size_t>(e_)),
        table_(completion_table(e_, r)) {
    for (EdgeId i = 0; i < e_; ++i) work_[i] = r_ + i;
    if (target_ == Target::Cycles) {
      searcher_ = std::make_unique<detail::CycleSearcher>(g_, work_, r_ + e_, dist_);
    }
  }

  /// True when a feasible colouring exists; it is then the first in canonical order.
  bool run() {
    if (r_ < 1 || r_ > e_) return false;
    bool ok = dfs(0, 0);
    meter_.flush();
    return ok;
  }
  const std::vector<Colour>& witness() const { return work_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t nodes() const { return meter_.total(); }

 private:
  bool dfs(int i, int used) {
    meter_.tick();
    if (i == e_) {
      count_ = sat_add(count_, 1);
      return leaf_ok();
    }
    if (i > 0 && pruned()) {
      count_ = sat_add(count_, table_[e_ - i][used]);
      return false;
    }
    const int top = std::min(used, r_ - 1);
    for (int c = 0; c <= top; ++c) {
      const int next_used = used + (c == used ? 1 : 0);
      if (e_ - i - 1 < r_ - next_used) continue;
      work_[i] = c;
      if (dfs(i + 1, next_used)) return true;
    }
    work_[i] = r_ + i;
    return false;
  }

  bool pruned() {
    if (target_ != Target::Cycles) return false;
    for (const auto& s : killers_) {
      if (!searcher_->find(s, r_, meter_)) return true;
    }
    return false;
  }

  void remember(std::span<const Vertex> s) {
    killers_.emplace_front(s.begin(), s.end());
    if (killers_.size() > 16) killers_.pop_back();
  }

  bool leaf_ok() {
    if (target_ == Target::Cycles) {
      for (std::size_t i = 0; i < killers_.size(); ++i) {
        if (!searcher_->find(killers_[i], r_, meter_)) {
          std::rotate(killers_.begin(), killers_.begin() + static_cast<std::ptrdiff_t>(i),
                      killers_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          return false;
        }
      }
      detail::CoverageChecker checker(g_, work_, r_ + e_, std::min(g_.order(), r_), dist_);
      for (ColexSubsets it(g_.order(), k_); !it.done(); it.next()) {
        if (!checker.covered(it.current(), meter_)) {
          remember(it.current());
          return false;
        }
      }
      return true;
    }
    EdgeColouring c(g_, work_, r_);
    for (const auto& s : killers_) {
      if (!rainbow_tree_through(c, s, budget_.limit())) return false;
    }
    auto rep = verify_k_rainbow_index_colouring(c, k_, SearchOptions{budget_.limit(), 1});
    budget_.charge(rep.nodes);
    if (rep.certified()) return true;
    remember(*rep.bad_set);
    return false;
  }

  const Graph& g_;
  int k_;
  int r_;
  int e_;
  Target target_;
  NodeBudget& budget_;
  NodeMeter meter_;
  std::shared_ptr<const std::vector<int>> dist_;
  std::vector<Colour> work_;
  std::vector<std::vector<std::uint64_t>> table_;
  std::unique_ptr<detail::CycleSearcher> searcher_;
  std::deque<std::vector<Vertex>> killers_;
  std::uint64_t count_ = 0;
};

void check_scope(const Graph& g, int k, const SolverOptions& opts) {
  if (opts.force) return;
  if (g.size() > 16) throw ScopeExceeded("exact solver scope is e(G) <= 16 (use force)");
  if (binomial(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(k)) > 100'000) {
    throw ScopeExceeded("exact solver scope is C(n, k) <= 100000 subsets (use force)");
  }
}

Certificate exhaustion_certificate(int r, std::uint64_t count) {
  Certificate c;
  c.kind = CertificateKind::Exhaustion;
  c.bound = r + 1;
  c.colours = r;
  c.count = count;
  return c;
}

CrxResult enumerate_minimum(const Graph& g, int k, Target target, int first_r, const Certificate* below,
                            const SolverOptions& opts) {
  CrxResult res;
  NodeBudget budget(opts.budget);
  auto dist = std::make_shared<const std::vector<int>>(all_pairs_distances(g));
  int r = 1;
  try {
    for (; r <= g.size(); ++r) {
      const bool certified_below = below && r < first_r;
      if (certified_below && stirling2(g.size(), r) > opts.exhaustion_limit) {
        res.evidence.push_back({r, *below});
        continue;
      }
      Enumerator en(g, k, r, target, budget, dist);
      const bool found = en.run();
      res.nodes += en.nodes();
      if (found) {
        res.kind = ResultKind::Exact;
        res.lower = res.upper = r;
        res.witness = EdgeColouring(g, en.witness(), r);
        return res;
      }
      if (en.count() != stirling2(g.size(), r)) {
        throw std::logic_error("canonical enumeration count disagrees with S(e, r)");
      }
      res.evidence.push_back({r, exhaustion_certificate(r, en.count())});
    }
  } catch (const BudgetExceeded& ex) {
    res.nodes = std::max(res.nodes, ex.nodes());
    res.kind = ResultKind::Interval;
    res.lower = std::max(r, first_r);
    while (static_cast<int>(res.evidence.size()) < res.lower - 1 && below) {
      res.evidence.push_back({static_cast<int>(res.evidence.size()) + 1, *below});
    }
    res.upper = g.size();
    res.witness = EdgeColouring::rainbow(g);
    if (res.lower >= res.upper) {
      res.kind = ResultKind::Exact;
      res.lower = res.upper;
    }
    return res;
  }
  throw std::logic_error("no feasible colouring up to e(G) colours");
}

/// Smallest cycle length through s when it exceeds `floor`, otherwise nullopt.
std::optional<int> length_above(detail::CycleSearcher& searcher, std::span<const Vertex> s, int floor, int n,
                                NodeMeter& meter) {
  if (floor >= 3 && searcher.find(s, floor - 1, meter)) return std::nullopt;
  for (int len = std::max(3, floor); len <= n; ++len) {
    if (searcher.find(s, len, meter)) return len;
  }
  return std::nullopt;
}

DistanceBound distance_bound(const Graph& g, int k, std::uint64_t budget, std::uint64_t seed, int stop_at) {
  DistanceBound best;
  const int n = g.order();
  if (k < 1 || n < k || n < 3) return best;
  auto colours = detail::identity_colours(g);
  detail::CycleSearcher searcher(g, colours, g.size());
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);

  auto consider = [&](std::span<const Vertex> s) {
    auto len = length_above(searcher, s, best.bound, n, meter);
    if (!len) return;
    std::vector<Vertex> set(s.begin(), s.end());
    if (*len > best.bound || (*len == best.bound && set < best.set)) {
      best.bound = *len;
      best.set = std::move(set);
    }
  };

  const std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  try {
    if (total <= 100'000) {
      best.exhaustive = true;
      for (ColexSubsets it(n, k); !it.done(); it.next()) {
        consider(it.current());
        if (stop_at > 0 && best.bound >= stop_at) break;
      }
    } else {
      std::mt19937_64 rng(seed);
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      for (int sample = 0; sample < 2000; ++sample) {
        for (int i = 0; i < k; ++i) {
          auto j = i + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(n - i)));
          std::swap(all[i], all[j]);
        }
        std::vector<Vertex> s(all.begin(), all.begin() + k);
        std::sort(s.begin(), s.end());
        consider(s);
        if (stop_at > 0 && best.bound >= stop_at) break;
      }
    }
  } catch (const BudgetExceeded&) {
    best.exhaustive = false;
  }
  return best;
}

bool obstruction_holds(const Graph& g, const Obstruction& ob, std::uint64_t budget) {
  NodeBudget nodes(budget);
  NodeMeter meter(nodes);
  bool ok = true;
  detail::for_each_cycle(
      g,
      [&](const detail::FoundCycle& c) {
        for (Vertex v : ob.set) {
          if (std::find(c.vertices.begin(), c.vertices.end(), v) == c.vertices.end()) return true;
        }
        bool has_e = std::find(c.edges.begin(), c.edges.end(), ob.e) != c.edges.end();
        bool has_e2 = std::find(c.edges.begin(), c.edges.end(), ob.e2) != c.edges.end();
        ok = has_e && has_e2;
        return ok;
      },
      meter);
  return ok;
}

/// Obstructions for every edge pair, when a known recipe applies.
std::optional<Certificate> obstruction_certificate(const Graph& g, int k) {
  Certificate cert;
  cert.kind = CertificateKind::ObstructionPair;
  cert.bound = g.size();
  const bool is_petersen = k == 9 && g == petersen();
  const bool minimal = k == 2 && g.size() <= 40 && is_minimally_2_connected(g);
  if (!is_petersen && !minimal) return std::nullopt;
  for (EdgeId e = 0; e < g.size(); ++e) {
    for (EdgeId e2 = e + 1; e2 < g.size(); ++e2) {
      Obstruction ob{e, e2, {}};
      if (is_petersen) {
        Vertex v = petersen_pair_obstruction(e, e2);
        for (Vertex x = 0; x < g.order(); ++x) {
          if (x != v) ob.set.push_back(x);
        }
      } else {
        auto [a, b] = minimal_2conn_obstruction(g, e, e2);
        ob.set = {std::min(a, b), std::max(a, b)};
      }
      cert.obstructions.push_back(std::move(ob));
    }
  }
  return cert;
}

std::optional<EdgeColouring> hamiltonian_colouring(const Graph& g, std::uint64_t budget) {
  auto ham = hamilton_cycle(g, budget);
  if (!ham) return std::nullopt;
  ColouringBuilder b(g);
  const int n = g.order();
  for (int i = 0; i < n; ++i) b.set((*ham)[i], (*ham)[(i + 1) % n], i);
  b.fill_unset(0);
  return b.finish(n);
}

std::vector<EdgeColouring> constructor_upper_bounds(const Graph& g, int k, std::uint64_t budget) {
  std::vector<EdgeColouring> out;
  const ConstructOptions opts{true, budget, 1};
  auto attempt = [&](const std::function<EdgeColouring()>& make) {
    try {
      out.push_back(make());
    } catch (const Error&) {
    }
  };
  const int n = g.order();
  try {
    if (auto h = hamiltonian_colouring(g, budget)) out.push_back(std::move(*h));
  } catch (const BudgetExceeded&) {
  }
  if (n >= 4 && g == wheel(n - 1)) attempt([&] { return colour_wheel(n - 1, k, opts); });
  if (g == complete(n)) {
    if (k <= 2) {
      attempt([&] { return colour_complete_2rainbow(n, opts); });
    } else {
      attempt([&] { return colour_complete_random(n, k, 0, 200, opts); });
    }
  }
  for (int m = 1; m <= n / 2; ++m) {
    if (g.size() == m * (n - m) && g == complete_bipartite(m, n - m)) {
      attempt([&] { return colour_bipartite(m, n - m, k, BipartiteScheme::Auto, opts); });
    }
  }
  for (int d = 2; d <= 20 && (1 << d) <= n; ++d) {
    if ((1 << d) == n && g == hypercube(d)) attempt([&] { return colour_cube(d, k, opts); });
  }
  if (k == 1) attempt([&] { return colour_save_one_crx1(g, opts); });
  if (k == 2) attempt([&] { return colour_save_one_crx2(g, opts); });
  return out;
}

}  // namespace

std::uint64_t count_canonical_colourings(int edges, int r) {
  std::uint64_t count = 0;
  std::function<void(int, int)> walk = [&](int i, int used) {
    if (i == edges) {
      if (used == r) ++count;
      return;
    }
    for (int c = 0; c <= std::min(used, r - 1); ++c) walk(i + 1, used + (c == used ? 1 : 0));
  };
  if (edges >= 0 && r >= 0) walk(0, 0);
  return count;
}

DistanceBound crx_lower_bound_distance(const Graph& g, int k, std::uint64_t budget, std::uint64_t seed) {
  return distance_bound(g, k, budget, seed, 0);
}

CrxResult crx_exact(const Graph& g, int k, const SolverOptions& opts) {
  if (k < 1) throw InvalidParameter("k must be positive");
  if (!in_family_Fk(g, k, opts.budget)) throw NotInFk("graph is not in F_" + std::to_string(k));
  check_scope(g, k, opts);
  const DistanceBound lb = crx_lower_bound_distance(g, k, opts.budget);
  Certificate cert;
  cert.kind = CertificateKind::DistanceBound;
  cert.bound = lb.bound;
  cert.set = lb.set;
  return enumerate_minimum(g, k, Target::Cycles, std::max(1, lb.bound), &cert, opts);
}

CrxResult rx_exact(const Graph& g, int k, const SolverOptions& opts) {
  if (k < 1) throw InvalidParameter("k must be positive");
  if (g.order() < k) throw InvalidParameter("graph has fewer than k vertices");
  if (!is_connected(g)) throw InvalidParameter("rainbow index needs a connected graph");
  if (k == 1) {
    CrxResult res;
    res.kind = ResultKind::Exact;
    return res;
  }
  check_scope(g, k, opts);
  return enumerate_minimum(g, k, Target::Trees, 1, nullptr, opts);
}

CrxResult crx_interval(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw InvalidParameter("k must be positive");
  if (!in_family_Fk(g, k, budget)) throw NotInFk("graph is not in F_" + std::to_string(k));
  CrxResult res;
  res.upper = g.size();
  res.witness = EdgeColouring::rainbow(g);
  for (EdgeColouring& c : constructor_upper_bounds(g, k, budget)) {
    if (c.colour_count() < res.upper) {
      res.upper = c.colour_count();
      res.witness = std::move(c);
    }
  }

  const DistanceBound lb = distance_bound(g, k, budget, 0, res.upper);
  Certificate best;
  best.kind = CertificateKind::DistanceBound;
  best.bound = lb.bound;
  best.set = lb.set;
  if (best.bound < res.upper) {
    try {
      if (auto ob = obstruction_certificate(g, k); ob && ob->bound > best.bound) best = std::move(*ob);
    } catch (const Error&) {
    }
  }
  res.lower = std::min(best.bound, res.upper);
  for (int r = 1; r < res.lower; ++r) res.evidence.push_back({r, best});
  res.kind = res.lower == res.upper ? ResultKind::Exact : ResultKind::Interval;
  return res;
}

bool check_certificate(const Graph& g, int k, const Certificate& cert, std::uint64_t budget) {
  switch (cert.kind) {
    case CertificateKind::DistanceBound: {
      if (static_cast<int>(cert.set.size()) != k) return false;
      auto len = min_cycle_length_through(g, cert.set, budget);
      return len && *len == cert.bound;
    }
    case CertificateKind::Exhaustion: {
      if (cert.bound != cert.colours + 1) return false;
      NodeBudget nodes(budget);
      auto dist = std::make_shared<const std::vector<int>>(all_pairs_distances(g));
      Enumerator en(g, k, cert.colours, Target::Cycles, nodes, dist);
      return !en.run() && en.count() == cert.count;
    }
    case CertificateKind::ObstructionPair: {
      if (cert.bound != g.size()) return false;
      std::vector<char> covered(static_cast<std::size_t>(g.size()) * g.size(), 0);
      for (const Obstruction& ob : cert.obstructions) {
        if (ob.e == ob.e2 || ob.e < 0 || ob.e2 < 0 || ob.e >= g.size() || ob.e2 >= g.size()) return false;
        if (ob.set.empty() || static_cast<int>(ob.set.size()) > k) return false;
        if (!obstruction_holds(g, ob, budget)) return false;
        covered[static_cast<std::size_t>(std::min(ob.e, ob.e2)) * g.size() + std::max(ob.e, ob.e2)] = 1;
      }
      for (EdgeId a = 0; a < g.size(); ++a) {
        for (EdgeId b = a + 1; b < g.size(); ++b) {
          if (!covered[static_cast<std::size_t>(a) * g.size() + b]) return false;
        }
      }
      return true;
    }
    case CertificateKind::ColourCollision: {
      if (!cert.colouring || !(cert.colouring->graph() == g)) return false;
      if (static_cast<int>(cert.set.size()) != k) return false;
      return !rainbow_cycle_through(*cert.colouring, cert.set, budget);
    }
  }
  return false;
}

}  // namespace crx
