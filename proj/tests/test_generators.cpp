#include <bit>
#include "crx/errors.hpp"
#include "corpus.hpp"
#include "crx/generators.hpp"
#include "crx/structure.hpp"
#include "doctest.h"

using namespace crx;

TEST_SUITE("generators") {
  TEST_CASE("family examples and counts") {
    CHECK(wheel(3) == complete(4));
    Graph q3 = hypercube(3);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    for (Vertex v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
    Graph p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(girth(p) == 5);
    CHECK(complete(6).size() == 15);
    CHECK(complete_bipartite(3, 5).size() == 15);
    CHECK(complete_multipartite(std::vector<int>{1, 2, 3}).size() == 11);
    CHECK(theta(2, 2, 1).size() == 5);
    CHECK(theta(2, 3, 4).order() == 8);
    CHECK_THROWS_AS(cycle(2), InvalidParameter);
    CHECK_THROWS_AS(wheel(2), InvalidParameter);
    CHECK_THROWS_AS(complete_multipartite(std::vector<int>{3, 2}), InvalidParameter);
    CHECK_THROWS_AS(theta(1, 1, 3), InvalidParameter);
  }

  TEST_CASE("labelling conventions") {
    Graph w = wheel(5);
    for (Vertex i = 0; i < 5; ++i) {
      CHECK(w.adjacent(i, (i + 1) % 5));
      CHECK(w.adjacent(i, 5));
    }
    Graph kb = complete_bipartite(2, 3);
    CHECK(kb.adjacent(0, 2));
    CHECK_FALSE(kb.adjacent(0, 1));
    CHECK_FALSE(kb.adjacent(2, 3));
  }

  TEST_CASE("path_cycle_join examples") {
    CHECK(path_cycle_join(1, 5) == cycle(5));
    // same graph as W_6 with the centre listed first
    Graph j23 = path_cycle_join(2, 3);
    std::vector<std::pair<int, int>> relabelled;
    for (const Edge& e : j23.edges()) relabelled.emplace_back((e.u + 6) % 7, (e.v + 6) % 7);
    CHECK(Graph(7, relabelled) == wheel(6));
    Graph j = path_cycle_join(3, 3);
    CHECK(j.order() == 11);
    CHECK(j.size() == 28);
    CHECK_THROWS_AS(path_cycle_join(1, 2), InvalidParameter);
  }

  TEST_CASE("hypercube distance is Hamming distance") {
    for (int n = 1; n <= 8; ++n) {
      Graph q = hypercube(n);
      CHECK(q.size() == n * (1 << (n - 1)));
      auto dist = bfs_distances(q, 0);
      for (Vertex v = 0; v < q.order(); ++v) CHECK(dist[v] == std::popcount(static_cast<unsigned>(v)));
      auto d5 = bfs_distances(q, q.order() - 1);
      for (Vertex v = 0; v < q.order(); ++v) CHECK(d5[v] == n - std::popcount(static_cast<unsigned>(v)));
    }
  }

  TEST_CASE("Sylvester Hadamard matrices") {
    auto h0 = sylvester_hadamard(0);
    CHECK(h0.order() == 1);
    CHECK(h0(0, 0) == 1);
    auto h1 = sylvester_hadamard(1);
    CHECK(h1(0, 0) == 1);
    CHECK(h1(0, 1) == 1);
    CHECK(h1(1, 0) == 1);
    CHECK(h1(1, 1) == -1);
    for (int t = 2; t <= 5; ++t) {
      auto h = sylvester_hadamard(t);
      for (int a = 0; a < h.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) CHECK(h.column_dot(a, b) == (a == b ? h.order() : 0));
      }
    }
  }

  TEST_CASE("cube split recombines") {
    CubeSplit s(3, 2);
    for (std::uint32_t v = 0; v < 32; ++v) CHECK(s.combine(s.hat(v), s.tilde(v)) == v);
    CHECK(s.hat(0b10110) == 0b110);
    CHECK(s.tilde(0b10110) == 0b10);
  }

  TEST_CASE("Hadamard spread vertices") {
    auto check_spread = [](int k, int n, int min_dist) {
      auto vs = hadamard_spread_vertices(k, n);
      REQUIRE(vs.size() == static_cast<std::size_t>(k));
      for (std::size_t a = 0; a < vs.size(); ++a) {
        CHECK(vs[a].size() == static_cast<std::size_t>(n));
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          int d = hamming_distance(vs[a], vs[b]);
          CHECK(d >= min_dist);
          CHECK(2 * d > n);
        }
      }
    };
    check_spread(4, 64, 42);
    check_spread(2, 9, 6);
    check_spread(5, 49, 4 * 7);
    CHECK_THROWS_AS(hadamard_spread_vertices(4, 8), SpreadTooSmall);
  }
}
