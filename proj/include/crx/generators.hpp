#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "crx/graph.hpp"

namespace crx {

/// Cycle v_0 v_1 .. v_{n-1} v_0. Requires n >= 3.
Graph cycle(int n);
Graph complete(int n);
/// Parts U = 0..m-1 and V = m..m+n-1.
Graph complete_bipartite(int m, int n);
/// Parts are consecutive id blocks; sizes must be positive and nondecreasing.
Graph complete_multipartite(std::span<const int> sizes);
/// Rim 0..n-1 in cyclic order, centre n. Requires n >= 3.
Graph wheel(int n);
/// Vertex id = coordinate vector read as binary, coordinate i is bit i - 1.
Graph hypercube(int n);
/// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram 5+i ~ 5+(i+2)%5.
Graph petersen();
/// Two vertices (0 and 1) joined by three internally disjoint paths of the given lengths.
/// At most one length may be 1.
Graph theta(int a, int b, int c);
/// Path u_0..u_{k-2} joined completely to the cycle v_0..v_{kt-1}; u_j = j, v_i = k - 1 + i.
Graph path_cycle_join(int k, int t);

/// Square matrix with entries +1 / -1, row-major.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(int order, std::vector<int> entries);
  int order() const { return order_; }
  int operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row) * order_ + col]; }
  int column_dot(int a, int b) const;

 private:
  int order_;
  std::vector<int> entries_;
};

/// H_1 = (1), H_{2q} = [[H_q, H_q], [H_q, -H_q]]. Order 2^t.
HadamardMatrix sylvester_hadamard(int t);

/// Q_n = Q_p (+) Q_q: the first p coordinates (low bits) and the last q (high bits).
class CubeSplit {
 public:
  CubeSplit(int p, int q);
  int p() const { return p_; }
  int q() const { return q_; }
  std::uint32_t hat(std::uint32_t v) const { return v & ((1U << p_) - 1U); }
  std::uint32_t tilde(std::uint32_t v) const { return v >> p_; }
  std::uint32_t combine(std::uint32_t hat, std::uint32_t tilde) const { return hat | (tilde << p_); }

 private:
  int p_;
  int q_;
};

/// Coordinate vectors (length n, entries 0/1) of k vertices of Q_n with
/// pairwise Hamming distance > n/2, from the rows of a Sylvester matrix.
std::vector<std::vector<int>> hadamard_spread_vertices(int k, int n);

int hamming_distance(std::span<const int> a, std::span<const int> b);

}  // namespace crx
