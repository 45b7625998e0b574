#include <string>

#include "corpus.hpp"
#include "crx/constructions.hpp"
#include "crx/errors.hpp"
#include "crx/generators.hpp"
#include "document.hpp"
#include "doctest.h"

using namespace crx;
using namespace crx::cli;
using nlohmann::json;

TEST_SUITE("cli_document") {
  TEST_CASE("round trip over the corpus") {
    int i = 0;
    for (const auto& [name, g] : corpus::small()) {
      GraphDocument doc;
      doc.graph = g;
      if (i % 2 == 0) doc.colouring = EdgeColouring::rainbow(g);
      if (i % 3 == 0) doc.metadata = Metadata{name, json{{"n", g.order()}}, i % 5 == 0 ? std::optional<std::uint64_t>(i) : std::nullopt};
      INFO(name);
      CHECK(parse_document(emit_document(doc)) == doc);
      ++i;
    }
    GraphDocument wheel_doc{.graph = wheel(6), .colouring = colour_wheel(6, 2),
                            .metadata = Metadata{"wheel", json{{"n", 6}}, std::nullopt}};
    CHECK(parse_document(emit_document(wheel_doc)) == wheel_doc);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_document(std::string("{not json")), SchemaError);
    CHECK_THROWS_AS(parse_document(json::array()), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"n", 3}, {"edges", json::array()}}), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 2}, {"n", 3}, {"edges", json::array()}}), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 3}, {"edges", {{0, 0}}}}), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 3}, {"edges", {{0, 1}, {1, 0}}}}), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 3}, {"edges", {{0, 5}}}}), SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 3}, {"edges", {{0, 1}, {1, 2}}},
                                        {"colouring", {{"r", 2}, {"colours", {0}}}}}),
                    SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 3}, {"edges", {{0, 1}, {1, 2}}},
                                        {"colouring", {{"r", 1}, {"colours", {0, 4}}}}}),
                    SchemaError);
    CHECK_THROWS_AS(parse_document(json{{"format_version", 1}, {"n", 2}, {"edges", {{0, 1}}},
                                        {"metadata", {{"seed", -1}}}}),
                    SchemaError);
  }

  TEST_CASE("unsorted edges keep their colours") {
    auto doc = parse_document(json{{"format_version", 1},
                                   {"n", 3},
                                   {"edges", {{2, 1}, {0, 2}, {1, 0}}},
                                   {"colouring", {{"r", 3}, {"colours", {2, 1, 0}}}}});
    REQUIRE(doc.colouring);
    CHECK(doc.graph == cycle(3));
    CHECK(doc.colouring->colour(1, 2) == 2);
    CHECK(doc.colouring->colour(0, 2) == 1);
    CHECK(doc.colouring->colour(0, 1) == 0);
  }

  TEST_CASE("dot export") {
    GraphDocument doc;
    doc.graph = cycle(3);
    doc.colouring = EdgeColouring::rainbow(cycle(3));
    std::string dot = to_dot(doc);
    CHECK(dot.find("graph") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("#e6194b") != std::string::npos);
    CHECK(dot.find("#4363d8") != std::string::npos);

    // colour 12 wraps onto the first palette entry
    std::vector<Colour> labels(13);
    for (int i = 0; i < 13; ++i) labels[static_cast<std::size_t>(i)] = i;
    Graph big = cycle(13);
    GraphDocument wrapped;
    wrapped.graph = big;
    wrapped.colouring = EdgeColouring(big, labels, 13);
    std::string text = to_dot(wrapped);
    std::size_t first = text.find("#e6194b");
    REQUIRE(first != std::string::npos);
    CHECK(text.find("#e6194b", first + 1) != std::string::npos);
  }

  TEST_CASE("result serialization") {
    auto j = to_json(crx_exact(cycle(4), 1));
    CHECK(j["kind"] == "exact");
    CHECK(j["value"] == 4);
    CHECK(j["evidence"].size() == 3);
    CHECK(j["witness"]["r"] == 4);
  }
}
