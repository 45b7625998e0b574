#include "crx/generators.hpp"

#include <algorithm>
#include <string>

#include "crx/errors.hpp"

namespace crx {

namespace {
using EdgeList = std::vector<std::pair<int, int>>;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
  EdgeList e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InvalidParameter("complete bipartite graph needs positive part sizes");
  EdgeList e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw InvalidParameter("multipartite graph needs at least one part");
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InvalidParameter("part sizes must be positive");
    if (i > 0 && sizes[i] < sizes[i - 1]) throw InvalidParameter("part sizes must be nondecreasing");
    part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(part.size());
  EdgeList e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) e.emplace_back(a, b);
  return Graph(n, e);
}

Graph wheel(int n) {
  if (n < 3) throw InvalidParameter("wheel needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n);
  }
  return Graph(n + 1, e);
}

Graph hypercube(int n) {
  if (n < 1 || n > 24) throw InvalidParameter("hypercube dimension must be in 1..24");
  const int count = 1 << n;
  EdgeList e;
  for (int v = 0; v < count; ++v)
    for (int d = 0; d < n; ++d)
      if (!(v & (1 << d))) e.emplace_back(v, v | (1 << d));
  return Graph(count, e);
}

Graph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidParameter("theta path lengths must be positive");
  if ((a == 1) + (b == 1) + (c == 1) > 1) throw InvalidParameter("theta graph allows at most one direct edge");
  EdgeList e;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph(next, e);
}

Graph path_cycle_join(int k, int t) {
  if (k < 1 || t < 1 || k * t < 3) throw InvalidParameter("path_cycle_join needs k, t >= 1 and kt >= 3");
  const int p = k - 1;
  const int c = k * t;
  EdgeList e;
  for (int j = 0; j + 1 < p; ++j) e.emplace_back(j, j + 1);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < c; ++i) e.emplace_back(j, p + i);
  for (int i = 0; i < c; ++i) e.emplace_back(p + i, p + (i + 1) % c);
  return Graph(p + c, e);
}

HadamardMatrix::HadamardMatrix(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  if (order < 1 || entries_.size() != static_cast<std::size_t>(order) * order) {
    throw InvalidParameter("Hadamard matrix shape mismatch");
  }
}

int HadamardMatrix::column_dot(int a, int b) const {
  int s = 0;
  for (int r = 0; r < order_; ++r) s += (*this)(r, a) * (*this)(r, b);
  return s;
}

HadamardMatrix sylvester_hadamard(int t) {
  if (t < 0 || t > 12) throw InvalidParameter("Sylvester order exponent must be in 0..12");
  std::vector<int> h{1};
  int q = 1;
  for (int step = 0; step < t; ++step) {
    const int q2 = 2 * q;
    std::vector<int> next(static_cast<std::size_t>(q2) * q2);
    for (int r = 0; r < q; ++r) {
      for (int c = 0; c < q; ++c) {
        int x = h[static_cast<std::size_t>(r) * q + c];
        next[static_cast<std::size_t>(r) * q2 + c] = x;
        next[static_cast<std::size_t>(r) * q2 + c + q] = x;
        next[static_cast<std::size_t>(r + q) * q2 + c] = x;
        next[static_cast<std::size_t>(r + q) * q2 + c + q] = -x;
      }
    }
    h = std::move(next);
    q = q2;
  }
  return HadamardMatrix(q, std::move(h));
}

CubeSplit::CubeSplit(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q > 31) throw InvalidParameter("cube split needs p, q >= 0 and p + q <= 31");
}

int hamming_distance(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InvalidParameter("Hamming distance needs equal lengths");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::vector<std::vector<int>> hadamard_spread_vertices(int k, int n) {
  if (k < 2) throw InvalidParameter("spread needs k >= 2");
  int t = 2;
  while ((1 << t) < k) ++t;
  const int kp = 1 << t;  // smallest power of two >= max(k, 4)
  const int parts = kp - 1;
  if (n < parts * parts) {
    throw SpreadTooSmall("spread needs n >= " + std::to_string(parts * parts) + " for k = " + std::to_string(k));
  }
  const HadamardMatrix h = sylvester_hadamard(t);

  // Balanced contiguous partition: the first n mod parts classes get the extra coordinate.
  std::vector<int> class_of(static_cast<std::size_t>(n));
  int pos = 0;
  for (int j = 0; j < parts; ++j) {
    int len = n / parts + (j < n % parts ? 1 : 0);
    for (int i = 0; i < len; ++i) class_of[pos++] = j;
  }

  std::vector<std::vector<int>> out;
  for (int l = 0; l < k; ++l) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = h(class_of[i] + 1, l) == 1 ? 1 : 0;
    out.push_back(std::move(v));
  }

  const int guaranteed = (kp / 2) * (n / parts);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      int d = hamming_distance(out[a], out[b]);
      if (d < guaranteed || 2 * d <= n) {
        throw SpreadTooSmall("spread vertices " + std::to_string(a) + ", " + std::to_string(b) + " at distance " +
                             std::to_string(d));
      }
    }
  }
  return out;
}

}  // namespace crx
