#include "crx/colouring.hpp"
#include "crx/errors.hpp"
#include "crx/generators.hpp"
#include "doctest.h"

using namespace crx;

TEST_SUITE("colouring") {
  TEST_CASE("validation") {
    Graph c4 = cycle(4);
    CHECK_NOTHROW(EdgeColouring(c4, {0, 1, 0, 1}, 2));
    CHECK_THROWS_AS(EdgeColouring(c4, {0, 1, 0}, 2), InvalidParameter);
    CHECK_THROWS_AS(EdgeColouring(c4, {0, 1, 2, 1}, 2), InvalidParameter);
    CHECK_THROWS_AS(EdgeColouring(c4, {0, 0, 0, 0}, 2), InvalidParameter);
    EdgeColouring loose(c4, {0, 0, 0, 0}, 2, true);
    CHECK(loose.used_colour_count() == 1);
  }

  TEST_CASE("compaction, permutation and class sizes") {
    Graph c4 = cycle(4);
    auto c = EdgeColouring::compacted(c4, std::vector<Colour>{7, 3, 7, 9});
    CHECK(std::vector<Colour>(c.colours().begin(), c.colours().end()) == std::vector<Colour>{0, 1, 0, 2});
    CHECK(c.colour_count() == 3);
    CHECK(c.class_sizes() == std::vector<int>{2, 1, 1});
    auto p = c.permuted(std::vector<Colour>{2, 0, 1});
    CHECK(std::vector<Colour>(p.colours().begin(), p.colours().end()) == std::vector<Colour>{2, 0, 2, 1});
    CHECK(EdgeColouring::rainbow(c4).colour_count() == 4);
  }

  TEST_CASE("builder") {
    Graph k3 = complete(3);
    ColouringBuilder b(k3);
    b.set(0, 1, 0);
    b.set(2, 1, 1);
    CHECK(b.is_set(1, 0));
    CHECK_FALSE(b.is_set(0, 2));
    CHECK_THROWS_AS(b.finish(2), InvalidParameter);
    CHECK_THROWS_AS(b.set(0, 0, 1), InvalidParameter);
    b.fill_unset(1);
    auto c = b.finish(2);
    CHECK(c.colour(0, 2) == 1);
    CHECK(c.colour(2, 1) == 1);
  }
}
