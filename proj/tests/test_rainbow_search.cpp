#include <random>

#include "corpus.hpp"
#include "crx/constructions.hpp"
#include "crx/generators.hpp"
#include "crx/rainbow_search.hpp"
#include "crx/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crx;

namespace {

EdgeColouring random_colouring(const Graph& g, int r, std::mt19937_64& rng) {
  std::vector<Colour> labels(static_cast<std::size_t>(g.size()));
  for (auto& c : labels) c = static_cast<Colour>(rng() % static_cast<std::uint64_t>(r));
  return EdgeColouring::compacted(g, labels);
}

std::vector<int> as_ints(std::span<const Colour> c) { return std::vector<int>(c.begin(), c.end()); }

}  // namespace

TEST_SUITE("rainbow_search") {
  TEST_CASE("rainbow_cycle_through examples") {
    auto q2 = EdgeColouring::rainbow(hypercube(2));
    Vertex v[] = {2};
    auto w = rainbow_cycle_through(q2, v);
    REQUIRE(w);
    CHECK(w->vertices.size() == 4);
    CHECK(is_valid_cycle_witness(q2, *w, v));

    auto wheel5 = colour_wheel(5, 2);
    Vertex pair[] = {0, 2};
    auto ww = rainbow_cycle_through(wheel5, pair);
    REQUIRE(ww);
    CHECK(ww->vertices.size() >= 4);
    CHECK(is_valid_cycle_witness(wheel5, *ww, pair));

    // every 5-colouring of K_{2,3} leaves some pair uncovered
    std::mt19937_64 rng(3);
    Graph k23 = complete_bipartite(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Colour> labels(6);
      for (int i = 0; i < 6; ++i) labels[i] = i;
      labels[rng() % 6] = static_cast<Colour>(rng() % 6);
      auto c = EdgeColouring::compacted(k23, labels);
      if (c.colour_count() != 5) continue;
      CHECK_FALSE(verify_k_rainbow_cycle_colouring(c, 2).certified());
    }

    // C_5 has one cycle: it passes through any vertex order
    auto c5 = EdgeColouring::rainbow(cycle(5));
    Vertex scrambled[] = {3, 0, 1};
    CHECK(rainbow_cycle_through(c5, scrambled));
  }

  TEST_CASE("min_cycle_length_through examples") {
    Vertex anti[] = {0, 7};
    CHECK(min_cycle_length_through(hypercube(3), anti) == 6);
    Vertex w5[] = {0, 2};
    CHECK(min_cycle_length_through(wheel(5), w5) == 4);
    for (int n = 3; n <= 7; ++n) {
      Vertex p[] = {0, n / 2};
      CHECK(min_cycle_length_through(cycle(n), p) == n);
    }
    Vertex p4[] = {0, 3};
    CHECK_FALSE(min_cycle_length_through(corpus::path(4), p4));
  }

  TEST_CASE("verify examples") {
    CHECK(verify_k_rainbow_cycle_colouring(colour_cube(3, 3), 3).certified());
    // 2 colours never suffice on K_4 for k = 1
    Graph k4 = complete(4);
    for (std::uint32_t mask = 1; mask + 1 < (1U << 6); ++mask) {
      std::vector<Colour> c(6);
      for (int i = 0; i < 6; ++i) c[i] = (mask >> i) & 1U;
      EdgeColouring col(k4, c, 2);
      CHECK_FALSE(verify_k_rainbow_cycle_colouring(col, 1).certified());
    }
    for (const auto& [name, g] : corpus::small()) {
      CAPTURE(name);
      for (int k = 1; k <= 3; ++k) {
        if (!in_family_Fk(g, k)) {
          CHECK_THROWS_AS(verify_k_rainbow_cycle_colouring(EdgeColouring::rainbow(g), k), NotInFk);
          break;
        }
        CHECK(verify_k_rainbow_cycle_colouring(EdgeColouring::rainbow(g), k).certified());
      }
    }
  }

  TEST_CASE("rainbow trees") {
    auto join = colour_join_rxk(2, 3);
    for (Vertex a = 0; a < join.graph().order(); ++a) {
      for (Vertex b = a + 1; b < join.graph().order(); ++b) {
        Vertex s[] = {a, b};
        auto t = rainbow_tree_through(join, s);
        REQUIRE(t);
        CHECK(is_valid_tree_witness(join, *t, s));
      }
    }
    auto c6 = EdgeColouring::rainbow(cycle(6));
    Vertex s3[] = {0, 2, 4};
    auto path = rainbow_tree_through(c6, s3);
    REQUIRE(path);
    CHECK(path->edges.size() == 4);
    EdgeColouring c4(cycle(4), {0, 1, 0, 1}, 2);  // edges 01, 03, 12, 23
    Vertex anti[] = {0, 2};
    CHECK_FALSE(rainbow_tree_through(c4, anti));
    CHECK_FALSE(verify_k_rainbow_index_colouring(c4, 2).certified());
  }

  TEST_CASE("oracle equivalence on 500 seeded instances") {
    std::mt19937_64 rng(500);
    int with_cycle = 0;
    for (int trial = 0; trial < 500; ++trial) {
      int n = 4 + static_cast<int>(rng() % 6);
      int m = std::min(n * (n - 1) / 2, n + static_cast<int>(rng() % 7));
      Graph g = oracle::random_graph(n, m, rng);
      auto c = random_colouring(g, 2 + static_cast<int>(rng() % m), rng);
      int k = 1 + static_cast<int>(rng() % 3);
      std::vector<int> s;
      for (Vertex v = 0; v < n; ++v) s.push_back(v);
      std::shuffle(s.begin(), s.end(), rng);
      s.resize(static_cast<std::size_t>(k));
      std::sort(s.begin(), s.end());
      auto cycles = oracle::all_cycles(oracle::plain(g));
      bool expected = oracle::rainbow_cycle_exists(cycles, as_ints(c.colours()), s);
      auto got = rainbow_cycle_through(c, s);
      CHECK(got.has_value() == expected);
      if (got) {
        ++with_cycle;
        CHECK(is_valid_cycle_witness(c, *got, s));
        auto shortest = min_cycle_length_through(g, s);
        REQUIRE(shortest);
        CHECK(*shortest <= static_cast<int>(got->vertices.size()));
        CHECK(*shortest == oracle::min_cycle_through(cycles, s));
      }
      if (g.size() <= 14) {
        CHECK(rainbow_tree_through(c, s).has_value() ==
              oracle::rainbow_tree_exists(oracle::plain(g), as_ints(c.colours()), s));
      }
    }
    CHECK(with_cycle > 50);
  }

  TEST_CASE("permutation invariance, monotonicity and thread determinism") {
    std::mt19937_64 rng(11);
    for (const auto& [name, g] : corpus::small()) {
      if (!is_two_connected(g)) continue;
      CAPTURE(name);
      auto c = random_colouring(g, std::max(3, g.size() - 2), rng);
      std::vector<Colour> perm(static_cast<std::size_t>(c.colour_count()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto p = c.permuted(perm);
      bool prev = true;
      for (int k = 1; k <= std::min(3, g.order()); ++k) {
        if (!in_family_Fk(g, k)) break;
        auto a = verify_k_rainbow_cycle_colouring(c, k);
        auto b = verify_k_rainbow_cycle_colouring(p, k);
        auto threaded = verify_k_rainbow_cycle_colouring(c, k, SearchOptions{NodeBudget::kDefault, 4});
        CHECK(a.certified() == b.certified());
        CHECK(a.bad_set == b.bad_set);
        CHECK(a.bad_set == threaded.bad_set);
        if (!prev) CHECK_FALSE(a.certified());
        prev = a.certified();
        if (a.bad_set) CHECK_FALSE(rainbow_cycle_through(c, *a.bad_set));
      }
    }
  }

  TEST_CASE("colour class collisions") {
    std::mt19937_64 rng(36);
    Graph k336 = complete_bipartite(3, 36);
    for (int trial = 0; trial < 20; ++trial) {
      auto c = random_colouring(k336, 7, rng);
      auto hit = colour_class_collision(c, 3, 2, CollisionMode::SharedColourSet);
      REQUIRE(hit);
      CHECK_FALSE(rainbow_cycle_through(c, *hit));
    }
    auto rb = EdgeColouring::rainbow(complete_bipartite(3, 5));
    CHECK_FALSE(colour_class_collision(rb, 3, 2));
    CHECK_FALSE(colour_class_collision(rb, 3, 2, CollisionMode::SharedColourSet));
    // a 1-colouring makes every vector identical
    EdgeColouring mono(complete_bipartite(2, 4), std::vector<Colour>(8, 0), 1);
    auto same = colour_class_collision(mono, 2, 3);
    REQUIRE(same);
    CHECK(*same == std::vector<Vertex>{2, 3, 4});
  }
}
