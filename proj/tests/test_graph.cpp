#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace girth;
using namespace testing;

TEST_CASE("triangle adjacency") {
    const auto g = unit_triangle();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    const auto adj = g.neighbors(0);
    REQUIRE(adj.size() == 2);
    CHECK(adj[0].neighbor == 1);
    CHECK(adj[0].length == 1.0);
    CHECK(adj[1].neighbor == 2);
    CHECK(adj[1].length == 1.0);
}

TEST_CASE("single edge") {
    const auto g = make(2, {{0, 1, 2.5}});
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).length == 2.5);
    CHECK(g.find_edge(1, 0) == 0);
    CHECK(g.incident(1, 0).to == 0);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make(3, {{0, 0, 1}}), GraphError);
    CHECK_THROWS_AS(make(3, {{0, 1, 1}, {1, 0, 2}}), GraphError);
    CHECK_THROWS_AS(make(3, {{0, 1, 0}}), GraphError);
    CHECK_THROWS_AS(make(3, {{0, 1, -1}}), GraphError);
    CHECK_THROWS_AS(make(3, {{0, 3, 1}}), GraphError);
    CHECK_THROWS_AS(make(3, {{0, 1, kInfinity}}), GraphError);
    try {
        make(3, {{1, 1, 2}});
        FAIL("expected a throw");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("(1, 1, 2)") != std::string::npos);
    }
}

TEST_CASE("adjacency sorted by length then neighbor") {
    const auto g = make(5, {{0, 4, 2}, {0, 3, 1}, {0, 2, 2}, {0, 1, 3}});
    std::vector<VertexId> order;
    for (const auto& a : g.neighbors(0)) order.push_back(a.neighbor);
    CHECK(order == std::vector<VertexId>{3, 2, 4, 1});
}

TEST_CASE("parse") {
    SUBCASE("with header") {
        const auto g = parse_edge_list("p 3 3\n0 1 1\n1 2 1\n0 2 1\n");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("headerless infers n") {
        const auto g = parse_edge_list("0 1 1\n");
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("header may declare isolated vertices") {
        const auto g = parse_edge_list("# comment\np 5 1\n0 1 0.25\n");
        CHECK(g.vertex_count() == 5);
        CHECK(g.degree(4) == 0);
    }
    SUBCASE("comments, blank lines, crlf-free whitespace") {
        const auto g = parse_edge_list("\n# a\n  0\t1   1.5  \n\n");
        CHECK(g.edge(0).length == 1.5);
    }
    SUBCASE("no trailing newline") {
        CHECK(parse_edge_list("0 1 1\n1 2 3").edge_count() == 2);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const GraphError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1 -1\n") == 1);
    CHECK(line_of("0 1 1\n1 2\n") == 2);
    CHECK(line_of("0 1 1\n# x\n1 2 abc\n") == 3);
    CHECK(line_of("0 1 1\np 2 1\n") == 2);
    CHECK_THROWS_AS(parse_edge_list("p 3 2\n0 1 1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("p 2 1\n0 2 1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("0 1 1\n1 0 1\n"), GraphError);
}

TEST_CASE("serialize round trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = small_random(seed);
        const auto text = serialize_edge_list(g);
        const auto h = parse_edge_list(text);
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.edge_count() == g.edge_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto a = g.neighbors(static_cast<VertexId>(v));
            const auto b = h.neighbors(static_cast<VertexId>(v));
            REQUIRE(a.size() == b.size());
            for (std::size_t j = 0; j < a.size(); ++j) {
                CHECK(a[j].neighbor == b[j].neighbor);
                CHECK(a[j].length == b[j].length);
            }
        }
        CHECK(serialize_edge_list(h) == text);
    }
}

TEST_CASE("structural invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = small_random(seed);
        std::size_t total = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto adj = g.neighbors(static_cast<VertexId>(v));
            total += adj.size();
            for (std::size_t j = 1; j < adj.size(); ++j)
                CHECK((adj[j - 1].length < adj[j].length ||
                       (adj[j - 1].length == adj[j].length &&
                        adj[j - 1].neighbor < adj[j].neighbor)));
        }
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("format_length") {
    CHECK(format_length(0.1) == "0.1");
    CHECK(format_length(3) == "3");
    CHECK(format_length(kInfinity) == "inf");
}
