#include <string>
#include <vector>

#include "construct_common.hpp"
#include "crx/generators.hpp"

namespace crx {

namespace {

BipartiteScheme auto_scheme(int m, int n, int k) {
  if (k == 1) return BipartiteScheme::FourColour;
  if (k == 2) {
    if (m == 2) return BipartiteScheme::Rainbow;
    if (m == 3) return n >= 36 ? BipartiteScheme::Colex : BipartiteScheme::Auto;
    return BipartiteScheme::EightColour;
  }
  if (m == k) return BipartiteScheme::Rainbow;
  if (m >= 3 * k) return BipartiteScheme::SixK;
  return BipartiteScheme::Auto;
}

bool applicable(BipartiteScheme s, int m, int n, int k) {
  switch (s) {
    case BipartiteScheme::FourColour: return k == 1;
    case BipartiteScheme::Rainbow: return m >= k;
    case BipartiteScheme::Colex: return k <= 2 && m == 3 && n >= 36;
    case BipartiteScheme::EightColour: return k <= 2 && m >= 4;
    case BipartiteScheme::SixK: return m >= 3 * k;
    case BipartiteScheme::Auto: return false;
  }
  return false;
}

std::string describe(int m, int n, int k) {
  return "(m, n, k) = (" + std::to_string(m) + ", " + std::to_string(n) + ", " + std::to_string(k) + ")";
}

}  // namespace

EdgeColouring colour_bipartite(int m, int n, int k, BipartiteScheme scheme, const ConstructOptions& opts) {
  if (m < 2 || n < m) throw InvalidParameter("colour_bipartite needs 2 <= m <= n");
  if (k < 1) throw InvalidParameter("k must be positive");
  if (scheme == BipartiteScheme::Auto) scheme = auto_scheme(m, n, k);
  if (!applicable(scheme, m, n, k)) {
    throw RegimeUnsupported("no colouring of K_{m,n} is known for " + describe(m, n, k));
  }

  const Graph g = complete_bipartite(m, n);
  ColouringBuilder b(g);
  // u(i), v(j) take the 1-based indices used in the formulas; set1 takes 1-based colours.
  auto u = [](int i) { return i - 1; };
  auto v = [m](int j) { return m + j - 1; };
  auto set1 = [&](int i, int j, int c) { b.set(u(i), v(j), c - 1); };
  int r = 0;

  switch (scheme) {
    case BipartiteScheme::FourColour:
      r = 4;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) set1(i, j, i == 1 ? (j == 1 ? 1 : 2) : (j == 1 ? 3 : 4));
      break;
    case BipartiteScheme::Rainbow:
      r = g.size();
      for (EdgeId e = 0; e < g.size(); ++e) b.set_edge(e, e);
      break;
    case BipartiteScheme::Colex: {
      r = 3;
      while (binomial(static_cast<std::uint64_t>(r), 3) < static_cast<std::uint64_t>(n)) ++r;
      const int fixed[3][3] = {{r - 4, r, r - 1}, {r - 1, r - 3, r}, {r, r - 1, r - 2}};  // [i][j] = colour of u_i v_j
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) set1(i, j, fixed[i - 1][j - 1]);
      ColexSubsets sets(r, 3);
      for (int j = 4; j <= n; ++j, sets.next()) {
        auto a = sets.current();
        for (int i = 1; i <= 3; ++i) set1(i, j, a[i - 1] + 1);
      }
      break;
    }
    case BipartiteScheme::EightColour:
      r = 8;
      for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= m; ++i) {
          int t = std::min(i, 4);
          int c;
          if (j == 1) c = 5 - t;
          else if (j == 2) c = 4 + t;
          else if (j == 3) c = 9 - t;
          else c = t;
          set1(i, j, c);
        }
      }
      break;
    case BipartiteScheme::SixK:
      r = 6 * k;
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          const bool iu = i <= 2 * k, jv = j <= 2 * k;
          if (iu && jv) set1(i, j, ((i - j) % (2 * k) + 2 * k) % (2 * k) + 1);
          else if (!iu && jv) set1(i, j, 2 * k + j);
          else if (iu && !jv) set1(i, j, 4 * k + i);
          else set1(i, j, 1);
        }
      }
      break;
    case BipartiteScheme::Auto:
      break;
  }
  EdgeColouring c = b.finish(r);
  detail::self_verify(c, k, opts, "colour_bipartite" + describe(m, n, k));
  return c;
}

}  // namespace crx
