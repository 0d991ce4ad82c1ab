#include <doctest.h>

#include "ohr/coloring.hpp"

using namespace ohr;

TEST_CASE("coloring bit layout test vectors") {
    // C(5,3) = 10 bits -> 2 bytes -> 4 hex chars; rank 0 is the MSB of byte 0
    HyperedgeColoring c(3, 5);
    CHECK(c.serialize() == "ORC 3 5\n0000\n");
    c.set({0, 1, 2}, Color::Blue);  // colex rank 0
    CHECK(c.serialize() == "ORC 3 5\n8000\n");
    c.set({1, 2, 3}, Color::Blue);  // colex rank 3
    CHECK(c.serialize() == "ORC 3 5\n9000\n");
    c.set_rank(9, Color::Blue);  // last meaningful bit
    CHECK(c.serialize() == "ORC 3 5\n9040\n");
    CHECK(c.get_rank(0) == Color::Blue);
    CHECK(c.get({0, 1, 3}) == Color::Red);
}

TEST_CASE("blue fill clears padding") {
    HyperedgeColoring c(3, 5, Color::Blue);
    CHECK(c.serialize() == "ORC 3 5\nffc0\n");
    for (std::uint64_t r = 0; r < c.subset_count(); ++r) CHECK(c.get_rank(r) == Color::Blue);
}

TEST_CASE("coloring round-trip and strict parsing") {
    HyperedgeColoring c(3, 7);
    for (std::uint64_t r = 0; r < c.subset_count(); ++r)
        c.set_rank(r, (ctr_rand(5, r) & 1) ? Color::Blue : Color::Red);
    auto back = HyperedgeColoring::parse(c.serialize());
    CHECK(back == c);

    CHECK_THROWS_AS(HyperedgeColoring::parse("ORX 3 5\n0000\n"), InvalidParameter);
    CHECK_THROWS_AS(HyperedgeColoring::parse("ORC 3 5\n000\n"), InvalidParameter);
    CHECK_THROWS_AS(HyperedgeColoring::parse("ORC 3 5\n00zz\n"), InvalidParameter);
    CHECK_THROWS_AS(HyperedgeColoring::parse("ORC 3 5\n0001\n"), InvalidParameter);  // padding
    CHECK_THROWS_AS(HyperedgeColoring::parse("ORC 1 5\n00\n"), InvalidParameter);
}

TEST_CASE("get and set by subset agree with rank access") {
    HyperedgeColoring c(2, 6);
    c.set({2, 4}, Color::Blue);
    CHECK(c.get_rank(colex_rank({2, 4})) == Color::Blue);
    c.set_rank(colex_rank({0, 5}), Color::Blue);
    CHECK(c.get({0, 5}) == Color::Blue);
}

TEST_CASE("color views partition the subsets") {
    HyperedgeColoring c(3, 6);
    for (std::uint64_t r = 0; r < c.subset_count(); ++r)
        c.set_rank(r, (ctr_rand(9, r) & 1) ? Color::Blue : Color::Red);
    ColorView blue(c, Color::Blue), red(c, Color::Red);
    CHECK(blue.edge_count() + red.edge_count() == c.subset_count());
    auto mat = blue.materialize();
    CHECK(mat.edge_count() == blue.edge_count());
    for (const auto& e : mat.edges()) {
        CHECK(blue.has_edge(e));
        CHECK(!red.has_edge(e));
    }
}

TEST_CASE("edge labeling round-trip and validation") {
    EdgeLabeling lab(5, 4);
    lab.set(0, 1, 3);
    lab.set(4, 2, 4);  // order of endpoints does not matter
    CHECK(lab.get(0, 1) == 3);
    CHECK(lab.get(2, 4) == 4);
    CHECK(lab.get(4, 2) == 4);
    auto back = EdgeLabeling::parse(lab.serialize());
    CHECK(back == lab);
    CHECK(lab.serialize().rfind("ORL 5 4\n", 0) == 0);

    CHECK_THROWS_AS(lab.set(0, 1, 0), InvalidParameter);
    CHECK_THROWS_AS(lab.set(0, 1, 5), InvalidParameter);
    CHECK_THROWS_AS(lab.get(1, 1), InvalidParameter);
    CHECK_THROWS_AS(EdgeLabeling::parse("ORL 5 4\n1 2 3\n"), InvalidParameter);
    CHECK_THROWS_AS(EdgeLabeling::parse("ORL 3 2\n1 2 3 1\n"), InvalidParameter);
    CHECK_THROWS_AS(EdgeLabeling::parse("ORL 3 2\n1 2 9\n"), InvalidParameter);
}
