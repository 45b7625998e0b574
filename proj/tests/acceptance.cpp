// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every check is recomputed from scratch; library results are compared with
// the brute-force oracles in oracles.hpp wherever one exists.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "crx/combinatorics.hpp"
#include "crx/constructions.hpp"
#include "crx/errors.hpp"
#include "crx/generators.hpp"
#include "crx/rainbow_search.hpp"
#include "crx/solver.hpp"
#include "crx/structure.hpp"
#include "oracles.hpp"

using namespace crx;

namespace {

/// Collects failed checks and informational notes for one criterion.
class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failed_ == 0; }
  int checks() const { return checks_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string show(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string tag(const std::string& name, int a, int b) {
  return name + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ---------------------------------------------------------------------------

void solver_exactness(Outcome& out) {
  struct Case {
    std::string name;
    Graph g;
    int k;
    int expected;
  };
  std::vector<Case> cases;
  for (int n = 3; n <= 6; ++n) cases.push_back({"C" + std::to_string(n), cycle(n), 1, n});
  cases.push_back({"K4", complete(4), 1, 3});
  cases.push_back({"K4", complete(4), 2, 3});
  cases.push_back({"K23", complete_bipartite(2, 3), 2, 6});
  cases.push_back({"W4", wheel(4), 2, 4});
  cases.push_back({"W4", wheel(4), 3, 4});

  for (const auto& c : cases) {
    const std::string id = "crx_" + std::to_string(c.k) + "(" + c.name + ")";
    CrxResult res = crx_exact(c.g, c.k);
    out.check(res.exact() && res.value() == c.expected,
              id + " = " + std::to_string(res.value()) + ", expected " + std::to_string(c.expected));
    out.check(res.witness && res.witness->colour_count() == c.expected &&
                  verify_k_rainbow_cycle_colouring(*res.witness, c.k).certified(),
              id + " witness");
    out.check(res.evidence.size() == static_cast<std::size_t>(c.expected - 1), id + " evidence count");
    for (const auto& ev : res.evidence) {
      out.check(ev.certificate.kind == CertificateKind::Exhaustion && ev.certificate.colours == ev.colours &&
                    ev.certificate.count == stirling2(c.g.size(), ev.colours) &&
                    check_certificate(c.g, c.k, ev.certificate),
                id + " exhaustion at " + std::to_string(ev.colours) + " colours");
    }
  }
  out.note(std::to_string(cases.size()) + " instances");
}

// ---------------------------------------------------------------------------

void constructor_certification(Outcome& out) {
  auto certified = [&](const EdgeColouring& c, int k, int expected, const std::string& id,
                       std::uint64_t budget = NodeBudget::kDefault) {
    out.check(c.colour_count() == expected && c.used_colour_count() == expected,
              id + " uses " + std::to_string(c.used_colour_count()) + " colours, expected " + std::to_string(expected));
    out.check(verify_k_rainbow_cycle_colouring(c, k, SearchOptions{budget, 1}).certified(), id + " not certified");
  };
  auto guarded = [&](const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      out.check(false, id + " threw: " + ex.what());
    }
  };

  // wheel: known optimal counts, written out independently of wheel_colour_count
  auto wheel_value = [](int n, int k) {
    if (k == 1) return 3;
    if (k == 2) return n == 3 ? 3 : (n + 1) / 2 + 2;
    if (k == 3) return n <= 7 ? n : (n <= 11 ? n - 1 : n - 2);
    return n < 2 * k ? n + 1 : n;
  };
  int runs = 0;
  for (int n = 3; n <= 14; ++n) {
    for (int k = 1; k <= 3; ++k) {
      guarded(tag("wheel", n, k), [&] { certified(colour_wheel(n, k), k, wheel_value(n, k), tag("wheel", n, k)); });
      ++runs;
    }
  }
  for (int n = 8; n <= 12; ++n, ++runs) {
    guarded(tag("wheel", n, 4), [&] { certified(colour_wheel(n, 4), 4, wheel_value(n, 4), tag("wheel", n, 4)); });
  }

  for (int n = 3; n <= 10; ++n, ++runs) {
    guarded("complete_2rainbow(" + std::to_string(n) + ")",
            [&] { certified(colour_complete_2rainbow(n), 2, 3, "complete_2rainbow(" + std::to_string(n) + ")"); });
  }

  auto colex_value = [](int n) {
    int r = 3;
    while (binomial(static_cast<std::uint64_t>(r), 3) < static_cast<std::uint64_t>(n)) ++r;
    return r;
  };
  auto bip = [&](int m, int n, int k, BipartiteScheme scheme, int expected) {
    const std::string id = "bipartite(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
    guarded(id, [&] { certified(colour_bipartite(m, n, k, scheme), k, expected, id); });
    ++runs;
  };
  for (int n = 2; n <= 10; ++n) bip(2, n, 1, BipartiteScheme::Auto, 4);
  for (int n = 36; n <= 40; ++n) bip(3, n, 2, BipartiteScheme::Auto, colex_value(n));
  for (int m = 4; m <= 6; ++m) {
    for (int n = m; n <= 20; ++n) bip(m, n, 2, BipartiteScheme::Auto, 8);
  }
  bip(6, 6, 2, BipartiteScheme::SixK, 12);
  bip(9, 9, 3, BipartiteScheme::SixK, 18);

  // every nondecreasing size tuple with at least 3 parts and total <= 9
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int min_part, int total) -> void {
    if (cur.size() >= 3) tuples.push_back(cur);
    for (int s = min_part; total + s <= 9; ++s) {
      cur.push_back(s);
      self(self, s, total + s);
      cur.pop_back();
    }
  };
  rec(rec, 1, 0);
  for (const auto& sizes : tuples) {
    std::string id = "blowup(";
    for (std::size_t i = 0; i < sizes.size(); ++i) id += (i ? "," : "") + std::to_string(sizes[i]);
    id += ")";
    guarded(id, [&] { certified(colour_multipartite_blowup(sizes), 1, 3, id); });
    ++runs;
  }

  for (int n = 2; n <= 6; ++n, ++runs) {
    guarded(tag("cube", n, 1), [&] { certified(colour_cube(n, 1), 1, 4, tag("cube", n, 1)); });
  }
  for (int n = 2; n <= 4; ++n, ++runs) {
    guarded(tag("cube", n, 3), [&] { certified(colour_cube(n, 3), 3, 2 * n, tag("cube", n, 3)); });
  }
  try {
    constexpr std::uint64_t kBig = 100'000'000;
    auto c = colour_cube(5, 3, ConstructOptions{true, kBig, 1});
    certified(c, 3, 10, tag("cube", 5, 3), kBig);
    out.note("optional cube(5,3) certified");
  } catch (const BudgetExceeded&) {
    out.note("optional cube(5,3) ran out of budget");
  }
  for (int n = 2; n <= 3; ++n, ++runs) {
    const int k = 1 << (n - 1);
    guarded(tag("cube", n, k), [&] { certified(colour_cube(n, k), k, 1 << n, tag("cube", n, k)); });
  }

  for (auto [k, t] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const std::string id = tag("join_rxk", k, t);
    guarded(id, [&] {
      auto c = colour_join_rxk(k, t);
      out.check(c.used_colour_count() == k * k - 1, id + " colour count");
      out.check(verify_k_rainbow_index_colouring(c, k).certified(), id + " not tree-certified");
    });
    ++runs;
  }
  out.note(std::to_string(runs) + " constructions");
}

// ---------------------------------------------------------------------------

void lower_bound_certificates(Outcome& out) {
  for (int n = 2; n <= 4; ++n) {
    Vertex anti[] = {0, (1 << n) - 1};
    auto len = min_cycle_length_through(hypercube(n), anti);
    out.check(len && *len == 2 * n, "Q_" + std::to_string(n) + " antipodal");
    if (n <= 3) {  // the subset oracle is exponential in e(G)
      auto oracle_len = oracle::min_cycle_through(oracle::all_cycles(oracle::plain(hypercube(n))), {anti[0], anti[1]});
      out.check(oracle_len == 2 * n, "Q_" + std::to_string(n) + " antipodal oracle");
    }
  }
  for (int n = 4; n <= 10; ++n) {
    Vertex pair[] = {0, n / 2};
    auto len = min_cycle_length_through(wheel(n), pair);
    out.check(len && *len == n / 2 + 2, "W_" + std::to_string(n) + " rim pair");
    if (n <= 8) {
      auto oracle_len = oracle::min_cycle_through(oracle::all_cycles(oracle::plain(wheel(n))), {0, n / 2});
      out.check(oracle_len == n / 2 + 2, "W_" + std::to_string(n) + " rim pair oracle");
    }
  }

  const Graph k336 = complete_bipartite(3, 36);
  std::mt19937_64 rng(7);
  int found = 0;
  constexpr int kSamples = 1000;
  for (int s = 0; s < kSamples; ++s) {
    std::vector<Colour> labels(static_cast<std::size_t>(k336.size()));
    for (auto& c : labels) c = static_cast<Colour>(rng() % 7);
    auto c = EdgeColouring::compacted(k336, labels);
    auto set = colour_class_collision(c, 3, 2, CollisionMode::SharedColourSet);
    if (!set) continue;
    ++found;
    if (s < 50) out.check(!rainbow_cycle_through(c, *set), "collision set " + show(*set) + " has a rainbow cycle");
  }
  out.check(found == kSamples, "collision found in " + std::to_string(found) + "/" + std::to_string(kSamples));
  out.note("K_{3,36} collisions " + std::to_string(found) + "/" + std::to_string(kSamples));
}

// ---------------------------------------------------------------------------

void petersen_certificate(Outcome& out) {
  const Graph p = petersen();
  int pairs = 0;
  for (EdgeId e = 0; e < p.size(); ++e) {
    for (EdgeId f = e + 1; f < p.size(); ++f) {
      ++pairs;
      const Vertex v = petersen_pair_obstruction(e, f);
      const Edge& a = p.edge(e);
      const Edge& b = p.edge(f);
      out.check(v != a.u && v != a.v && v != b.u && v != b.v, "obstruction vertex on an edge");
      Vertex gone[] = {v};
      Subgraph sub = remove_vertices(p, gone);
      auto cycles = oracle::all_cycles(oracle::plain(sub.graph));
      int hamiltonian = 0;
      for (const auto& c : cycles) {
        if (c.vertices.size() != 9) continue;
        ++hamiltonian;
        bool has_e = false, has_f = false;
        for (int x : c.edges) {
          has_e |= sub.parent_edge[static_cast<std::size_t>(x)] == e;
          has_f |= sub.parent_edge[static_cast<std::size_t>(x)] == f;
        }
        out.check(has_e && has_f, "pair (" + std::to_string(e) + "," + std::to_string(f) + ")");
      }
      out.check(hamiltonian > 0, "P - " + std::to_string(v) + " has no Hamilton cycle");
    }
  }
  out.check(pairs == 105, "pair count");
  auto res = crx_interval(p, 9);
  out.check(res.exact() && res.value() == 15, "crx_9(P) interval");
  out.note(std::to_string(pairs) + " pairs");
}

// ---------------------------------------------------------------------------

void minimal_two_connectivity(Outcome& out) {
  int compared = 0;
  for (const auto& [name, g] : corpus::small()) {
    if (g.order() > 7 || g.size() > 10) continue;
    ++compared;
    out.check(is_minimally_2_connected(g) == oracle::minimally_2_connected(oracle::plain(g)), name);
  }

  std::vector<std::pair<std::string, Graph>> targets;
  for (int n = 3; n <= 5; ++n) targets.emplace_back("K2," + std::to_string(n), complete_bipartite(2, n));
  targets.emplace_back("theta(2,3,3)", theta(2, 3, 3));
  targets.emplace_back("theta(3,3,4)", theta(3, 3, 4));
  targets.emplace_back("theta(2,4,5)", theta(2, 4, 5));
  int pairs = 0;
  for (const auto& [name, g] : targets) {
    out.check(oracle::minimally_2_connected(oracle::plain(g)), name + " is not minimally 2-connected");
    auto cycles = oracle::all_cycles(oracle::plain(g));
    for (EdgeId e = 0; e < g.size(); ++e) {
      for (EdgeId f = e + 1; f < g.size(); ++f) {
        ++pairs;
        auto [u, v] = minimal_2conn_obstruction(g, e, f);
        bool through_any = false;
        bool all_use = true;
        for (const auto& c : cycles) {
          if (!oracle::contains_all(c.vertices, {std::min(u, v), std::max(u, v)})) continue;
          through_any = true;
          all_use &= std::binary_search(c.edges.begin(), c.edges.end(), e) &&
                     std::binary_search(c.edges.begin(), c.edges.end(), f);
        }
        out.check(through_any && all_use, name + " pair (" + std::to_string(e) + "," + std::to_string(f) + ")");
      }
    }
  }
  out.note(std::to_string(compared) + " corpus graphs, " + std::to_string(pairs) + " obstruction pairs");
}

// ---------------------------------------------------------------------------

void separation(Outcome& out) {
  struct Case {
    std::string name;
    Graph g;
    int k;
    int crx;
    int rx;
  };
  const std::vector<Case> cases = {
      {"K4", complete(4), 1, 3, 0}, {"K4", complete(4), 2, 3, 1}, {"C5", cycle(5), 3, 5, 3}};
  for (const auto& c : cases) {
    auto a = crx_exact(c.g, c.k);
    auto b = rx_exact(c.g, c.k);
    const std::string id = c.name + " k=" + std::to_string(c.k);
    out.check(a.exact() && b.exact(), id + " not exact");
    out.check(a.value() == c.crx && b.value() == c.rx,
              id + ": crx " + std::to_string(a.value()) + ", rx " + std::to_string(b.value()));
    out.check(a.value() - b.value() == c.crx - c.rx, id + " gap");
    if (b.witness && c.rx > 0) out.check(verify_k_rainbow_index_colouring(*b.witness, c.k).certified(), id + " rx witness");
  }
}

// ---------------------------------------------------------------------------

void probabilistic_bounds(Outcome& out) {
  constexpr std::uint64_t kSeed = 2024;
  constexpr int kAttempts = 2000;
  std::string failures;
  bool complete_ok = false;
  for (int n = 3; n <= 16 && !complete_ok; ++n) {
    try {
      auto c = colour_complete_random(n, 3, kSeed, kAttempts);
      complete_ok = c.colour_count() <= 5 && verify_k_rainbow_cycle_colouring(c, 3).certified();
      out.note("K_" + std::to_string(n) + " 5-colouring found");
    } catch (const AttemptsExhausted& ex) {
      failures += " K_" + std::to_string(n);
    }
  }
  out.check(complete_ok, "no certified 5-colouring of K_n for n <= 16");

  bool multi_ok = false;
  for (int n = 2; n <= 12 && !multi_ok; ++n) {
    try {
      auto c = colour_balanced_multipartite_random(2, n, 2, kSeed, kAttempts);
      multi_ok = c.colour_count() <= 4 && verify_k_rainbow_cycle_colouring(c, 2).certified();
      out.note("K_{2x" + std::to_string(n) + "} 4-colouring found");
    } catch (const AttemptsExhausted&) {
      failures += " K_{2x" + std::to_string(n) + "}";
    } catch (const InvalidParameter&) {
      failures += " K_{2x" + std::to_string(n) + "}(rejected)";
    }
  }
  out.check(multi_ok, "no certified 4-colouring of K_{2xn} for n <= 12");
  if (!failures.empty()) out.note("exhausted below threshold:" + failures);
}

// ---------------------------------------------------------------------------

void hadamard_spread(Outcome& out) {
  auto vs = hadamard_spread_vertices(4, 64);
  out.check(vs.size() == 4, "vertex count");
  int least = 64;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.check(vs[i].size() == 64, "vector length");
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      int d = 0;
      for (std::size_t x = 0; x < 64; ++x) d += vs[i][x] != vs[j][x];
      least = std::min(least, d);
    }
  }
  out.check(least >= 42 && least > 32, "least pairwise distance " + std::to_string(least));
  out.note("least pairwise distance " + std::to_string(least));
}

// ---------------------------------------------------------------------------

// A rainbow walk in the recursive colouring of Q_6 = Q_3 (+) Q_3 cannot reuse a
// low-direction colour, and those colours depend only on the low coordinates
// (one colour per edge of the low Q_3). So the walk's low edges project to
// distinct edges of Q_3, and path i projects to a trail from proj(t_i) to
// proj(t_{i+1}) with all trails edge-disjoint. The same holds for the high
// coordinates. If either projection admits no such trail system, no rainbow
// walk exists. Q_3 has 12 edges, so the trail systems are enumerated exactly.
class TrailSystem {
 public:
  explicit TrailSystem(int bits) : bits_(bits), used_(static_cast<std::size_t>(bits) << bits, 0) {}

  bool exists(const std::vector<std::pair<int, int>>& ends) {
    ends_ = ends;
    return route(0, ends_.empty() ? 0 : ends_[0].first);
  }

 private:
  // Extends trail i, currently at x.
  bool route(std::size_t i, int x) {
    if (i == ends_.size()) return true;
    if (x == ends_[i].second && (i + 1 == ends_.size() || route(i + 1, ends_[i + 1].first))) return true;
    for (int d = 0; d < bits_; ++d) {
      const int y = x ^ (1 << d);
      auto& slot = used_[static_cast<std::size_t>(d << bits_ | std::min(x, y))];
      if (slot) continue;
      slot = 1;
      bool ok = route(i, y);
      slot = 0;
      if (ok) return true;
    }
    return false;
  }

  int bits_;
  std::vector<char> used_;
  std::vector<std::pair<int, int>> ends_;
};

bool projection_obstruction(std::span<const Vertex> tuple, int low_bits, int high_bits) {
  for (int side = 0; side < 2; ++side) {
    const int shift = side == 0 ? 0 : low_bits;
    const int bits = side == 0 ? low_bits : high_bits;
    auto proj = [&](Vertex v) { return (v >> shift) & ((1 << bits) - 1); };
    std::vector<std::pair<int, int>> ends;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const int a = proj(tuple[i]);
      const int b = proj(tuple[(i + 1) % tuple.size()]);
      if (a != b) ends.emplace_back(a, b);
    }
    if (!TrailSystem(bits).exists(ends)) return true;
  }
  return false;
}

void recursive_cube(Outcome& out) {
  constexpr int n = 6, k = 4, K = 3;
  const int C = 1 << (2 * K - 1);  // rainbow Q_{2K-1} is the largest base
  const Graph g = hypercube(n);
  const EdgeColouring c = colour_cube_recursive(n, k, K);
  out.check(c.colour_count() <= C * n,
            std::to_string(c.colour_count()) + " colours exceeds C*n = " + std::to_string(C * n));
  out.check(c.colour_count() == cube_recursive_colour_count(n, K), "declared colour count");

  // colour-disjointness: low and high directions never share a colour
  std::set<Colour> low, high;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    ((ed.u ^ ed.v) < (1 << (n - K)) ? low : high).insert(c.colour(e));
  }
  std::vector<Colour> shared;
  std::set_intersection(low.begin(), low.end(), high.begin(), high.end(), std::back_inserter(shared));
  out.check(shared.empty(), "low and high layers share colours");

  std::mt19937_64 rng(99);
  int spliced = 0, searched = 0, refuted = 0, undecided = 0;
  std::string example;
  constexpr int kTuples = 200;
  constexpr std::uint64_t kSearchBudget = 2'000'000;
  for (int t = 0; t < kTuples; ++t) {
    std::vector<Vertex> tuple(k);
    for (auto& v : tuple) v = static_cast<Vertex>(rng() % (1U << n));
    try {
      auto w = cube_recursive_walk(n, K, tuple);
      if (is_valid_walk(g, w, &c)) {
        ++spliced;
        out.check(!projection_obstruction(tuple, n - K, K), "projection argument refutes a spliced walk");
        continue;
      }
    } catch (const BaseWalkNotFound&) {
    } catch (const BudgetExceeded&) {
    }
    if (projection_obstruction(tuple, n - K, K)) {
      ++refuted;
      if (example.empty()) example = show(tuple);
      continue;
    }
    try {
      auto w = find_subdivided_closed_walk(g, tuple, &c, kSearchBudget);
      if (!w) {
        ++refuted;  // the search is exhaustive
        if (example.empty()) example = show(tuple);
      } else {
        out.check(is_valid_walk(g, *w, &c), "search returned an invalid walk for " + show(tuple));
        ++searched;
      }
    } catch (const BudgetExceeded&) {
      ++undecided;
    }
  }
  out.check(spliced + searched == kTuples, "tuples without a rainbow walk: " + std::to_string(refuted) +
                                               " proven, " + std::to_string(undecided) + " undecided");
  std::string summary = std::to_string(c.colour_count()) + " colours (C*n = " + std::to_string(C * n) + "); " +
                        std::to_string(spliced) + " spliced, " + std::to_string(searched) + " found by search, " +
                        std::to_string(refuted) + " proven walk-free, " + std::to_string(undecided) + " undecided";
  if (!example.empty()) summary += "; e.g. " + example;
  out.note(summary);
}

// ---------------------------------------------------------------------------

void enumeration_soundness(Outcome& out) {
  for (int e = 0; e <= 8; ++e) {
    for (int r = 0; r <= e; ++r) {
      const auto count = count_canonical_colourings(e, r);
      out.check(count == oracle::stirling_by_surjections(e, r) && count == stirling2(e, r),
                "count(" + std::to_string(e) + "," + std::to_string(r) + ")");
    }
  }

  std::mt19937_64 rng(20240601);
  int positive = 0;
  constexpr int kInstances = 500;
  for (int i = 0; i < kInstances; ++i) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int max_m = std::min(n * (n - 1) / 2, 16);
    const int m = n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m - n + 1));
    const Graph g = oracle::random_graph(n, std::min(m, max_m), rng);
    const int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(g.size()));
    std::vector<Colour> labels(static_cast<std::size_t>(g.size()));
    for (auto& x : labels) x = static_cast<Colour>(rng() % static_cast<std::uint64_t>(r));
    const EdgeColouring c = EdgeColouring::compacted(g, labels);
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4)));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> s(perm.begin(), perm.begin() + size);
    std::sort(s.begin(), s.end());

    const auto cycles = oracle::all_cycles(oracle::plain(g));
    const std::vector<int> colours(c.colours().begin(), c.colours().end());
    const bool expected = oracle::rainbow_cycle_exists(cycles, colours, s);
    auto w = rainbow_cycle_through(c, s);
    out.check(w.has_value() == expected, "instance " + std::to_string(i));
    if (w) {
      ++positive;
      out.check(is_valid_cycle_witness(c, *w, s), "instance " + std::to_string(i) + " witness");
    }
  }
  out.note(std::to_string(kInstances) + " instances, " + std::to_string(positive) + " with a rainbow cycle");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "solver exactness", solver_exactness},
      {2, "constructor certification", constructor_certification},
      {3, "lower-bound certificates", lower_bound_certificates},
      {4, "Petersen certificate", petersen_certificate},
      {5, "minimal 2-connectivity", minimal_two_connectivity},
      {6, "separation", separation},
      {7, "probabilistic upper bounds", probabilistic_bounds},
      {8, "Hadamard spread", hadamard_spread},
      {9, "recursive cube colouring", recursive_cube},
      {10, "enumeration soundness", enumeration_soundness},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(out);
    } catch (const std::exception& ex) {
      out.check(false, std::string("uncaught exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (out.passed() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name << " (" << out.checks()
         << " checks, " << std::fixed;
    line.precision(1);
    line << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : out.notes()) std::cout << "        " << n << "\n";
    for (const auto& f : out.failures()) std::cout << "        failed: " << f << "\n";
    if (out.failed() > static_cast<int>(out.failures().size())) {
      std::cout << "        ... " << out.failed() - static_cast<int>(out.failures().size()) << " more\n";
    }
    std::cout.flush();
    if (!out.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
