#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "construct_common.hpp"
#include "crx/generators.hpp"

namespace crx {

int wheel_colour_count(int n, int k) {
  if (n < 3) throw InvalidParameter("wheel needs n >= 3");
  if (k < 1 || k > n + 1) throw InvalidParameter("wheel needs 1 <= k <= n + 1");
  if (k == 1) return 3;
  if (k == 2) return n == 3 ? 3 : (n + 1) / 2 + 2;
  if (k == 3) {
    if (n <= 7) return n;
    return n <= 11 ? n - 1 : n - 2;
  }
  return n < 2 * k ? n + 1 : n;
}

EdgeColouring colour_wheel(int n, int k, const ConstructOptions& opts) {
  const int r = wheel_colour_count(n, k);
  const Graph g = wheel(n);
  const Vertex centre = n;
  ColouringBuilder b(g);
  // The formulas below use 1-based colours; v(i) reduces rim indices mod n.
  auto v = [n](int i) { return ((i % n) + n) % n; };
  auto rim = [&](int a, int c) { b.set(v(a), v(a + 1), c - 1); };  // edge v_a v_{a+1}
  auto spoke = [&](int i, int c) { b.set(centre, v(i), c - 1); };

  if (k == 1) {
    for (int i = 0; i < n; ++i) {
      spoke(i, i % 2 == 1 ? 1 : 2);
      rim(i, 3);
    }
  } else if (n == 3 && k <= 3) {
    for (int i = 1; i <= 3; ++i) {
      spoke(i, i);
      rim(i + 1, i);
    }
  } else if (k == 2) {
    const int h = (n + 1) / 2;
    for (int i = 1; i <= n; ++i) rim(i - 1, (i - 1) % h + 1);
    for (int i = 0; i < n; ++i) spoke(i, i < h ? h + 1 : h + 2);
  } else if (k == 3 && n <= 7) {
    for (int i = 1; i <= n; ++i) rim(i - 1, (i - 1) % (n - 2) + 1);
    spoke(0, n - 1);
    spoke(1, n - 1);
    spoke(2, n);
    spoke(n - 2, n);
    spoke(n - 1, n);
  } else if (k == 3 && n <= 11) {
    rim(0, 1);
    rim(4, 1);
    rim(2, 2);
    rim(6, 2);
    for (int i : {2, 4, 6, 8}) {
      spoke(i - 2, i / 2 + 2);
      rim(i - 1, i / 2 + 2);
    }
    for (int i = 9; i <= n; ++i) rim(i - 1, i - 2);
    for (int i : {1, 3, 5, 7}) spoke(i, n - 1);
  } else if (k == 3) {
    rim(0, 1);
    rim(6, 1);
    rim(3, 2);
    rim(9, 2);
    for (int i : {2, 5, 8, 11}) {
      spoke(i - 2, 2 * (i + 1) / 3 + 1);
      rim(i - 1, 2 * (i + 1) / 3 + 1);
    }
    for (int i : {3, 6, 9}) {
      spoke(i + 1, 2 * i / 3 + 2);
      rim(i - 1, 2 * i / 3 + 2);
    }
    spoke(1, 10);
    rim(11, 10);
    for (int i = 13; i <= n; ++i) rim(i - 1, i - 2);
  } else if (n >= 2 * k) {
    for (int i = 1; i <= n; ++i) rim(i - 1, i);
    const int last = k % 2 == 0 ? 2 * k - 1 : 2 * k - 7;
    for (int j = 0; j <= last; ++j) spoke(j, j % 4 <= 1 ? j + 2 : j - 1);
    if (k % 2 == 1) {
      spoke(2 * k - 6, 2 * k - 4);
      spoke(2 * k - 2, 2 * k - 4);
      spoke(2 * k - 5, 2 * k - 2);
      spoke(2 * k - 1, 2 * k - 2);
      spoke(2 * k - 4, 2 * k - 5);
      spoke(2 * k - 3, 2 * k - 1);
    }
  } else {
    // Rainbow Hamilton cycle v_0 .. v_{n-1} v v_0.
    for (int i = 0; i + 1 < n; ++i) rim(i, i + 1);
    spoke(n - 1, n);
    spoke(0, n + 1);
  }
  b.fill_unset(0);
  EdgeColouring c = b.finish(r);
  detail::self_verify(c, k, opts, "colour_wheel(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return c;
}

namespace {

/// Colour matrix of the inductive 3-colouring of K_n.
std::vector<std::vector<Colour>> complete_2rainbow_matrix(int n) {
  std::vector<std::vector<Colour>> col(static_cast<std::size_t>(n), std::vector<Colour>(static_cast<std::size_t>(n), -1));
  auto set = [&](int a, int b, Colour c) { col[a][b] = col[b][a] = c; };
  set(0, 1, 0);
  set(0, 2, 1);
  set(1, 2, 2);
  for (int u = 3; u < n; ++u) {
    // Old graph is K_u on 0..u-1.
    std::vector<char> done(static_cast<std::size_t>(u), 0);
    if (u % 2 == 1) {
      int x[3] = {-1, -1, -1};
      for (int a = 0; a < u && x[0] < 0; ++a)
        for (int b2 = a + 1; b2 < u && x[0] < 0; ++b2)
          for (int c = b2 + 1; c < u; ++c) {
            if (col[a][b2] != col[b2][c] && col[b2][c] != col[a][c] && col[a][b2] != col[a][c]) {
              x[0] = a;
              x[1] = b2;
              x[2] = c;
              break;
            }
          }
      for (int i = 0; i < 3; ++i) {
        set(u, x[i], col[x[(i + 1) % 3]][x[(i + 2) % 3]]);
        done[x[i]] = 1;
      }
    }
    std::vector<int> rest;
    for (int v = 0; v < u; ++v) {
      if (!done[v]) rest.push_back(v);
    }
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
      int a = rest[i], b2 = rest[i + 1];
      std::vector<Colour> others;
      for (Colour c = 0; c < 3; ++c) {
        if (c != col[a][b2]) others.push_back(c);
      }
      set(u, a, others[0]);
      set(u, b2, others[1]);
    }
  }
  return col;
}

EdgeColouring from_matrix(const Graph& g, const std::vector<std::vector<Colour>>& col, int r) {
  ColouringBuilder b(g);
  for (const Edge& e : g.edges()) b.set(e.u, e.v, col[e.u][e.v]);
  return b.finish(r);
}

}  // namespace

EdgeColouring colour_complete_2rainbow(int n, const ConstructOptions& opts) {
  if (n < 3) throw InvalidParameter("colour_complete_2rainbow needs n >= 3");
  EdgeColouring c = from_matrix(complete(n), complete_2rainbow_matrix(n), 3);
  detail::self_verify(c, 2, opts, "colour_complete_2rainbow(" + std::to_string(n) + ")");
  return c;
}

EdgeColouring colour_multipartite_blowup(std::span<const int> sizes, const ConstructOptions& opts) {
  const int t = static_cast<int>(sizes.size());
  if (t < 3) throw InvalidParameter("multipartite blow-up needs at least 3 classes");
  const Graph g = complete_multipartite(sizes);
  const auto base = complete_2rainbow_matrix(t);
  std::vector<int> part;
  for (int i = 0; i < t; ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), i);
  ColouringBuilder b(g);
  for (const Edge& e : g.edges()) b.set(e.u, e.v, base[part[e.u]][part[e.v]]);
  EdgeColouring c = b.finish(3);
  detail::self_verify(c, 1, opts, "colour_multipartite_blowup");
  return c;
}

namespace {

EdgeColouring sample_until_certified(const Graph& g, int k, int q, std::uint64_t seed, int max_attempts,
                                     const ConstructOptions& opts, const std::string& what) {
  if (max_attempts < 1) throw InvalidParameter("max_attempts must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Colour> colours(static_cast<std::size_t>(g.size()));
  std::vector<char> used(static_cast<std::size_t>(q));
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::fill(used.begin(), used.end(), 0);
    for (auto& c : colours) {
      c = static_cast<Colour>(detail::uniform_below(rng, static_cast<std::uint64_t>(q)));
      used[c] = 1;
    }
    if (std::count(used.begin(), used.end(), 1) != q) continue;
    EdgeColouring c(g, colours, q);
    if (verify_k_rainbow_cycle_colouring(c, k, SearchOptions{opts.budget, opts.threads}).certified()) return c;
  }
  throw AttemptsExhausted(what + ": no certified colouring in " + std::to_string(max_attempts) + " attempts",
                          max_attempts);
}

}  // namespace

EdgeColouring colour_complete_random(int n, int k, std::uint64_t seed, int max_attempts,
                                     const ConstructOptions& opts) {
  if (k < 3) throw InvalidParameter("colour_complete_random needs k >= 3");
  if (n < k) throw InvalidParameter("colour_complete_random needs n >= k");
  return sample_until_certified(complete(n), k, 2 * k - 1, seed, max_attempts, opts,
                                "colour_complete_random(" + std::to_string(n) + ", " + std::to_string(k) + ")");
}

EdgeColouring colour_balanced_multipartite_random(int t, int n, int k, std::uint64_t seed, int max_attempts,
                                                  const ConstructOptions& opts) {
  if (t < 2) throw InvalidParameter("balanced multipartite sampler needs t >= 2");
  if (k < 2) throw InvalidParameter("balanced multipartite sampler needs k >= 2");
  if (n < k) throw InvalidParameter("balanced multipartite sampler needs n >= k");
  std::vector<int> sizes(static_cast<std::size_t>(t), n);
  return sample_until_certified(complete_multipartite(sizes), k, 2 * k, seed, max_attempts, opts,
                                "colour_balanced_multipartite_random");
}

}  // namespace crx
