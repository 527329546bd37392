#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "girth/oracles.hpp"
#include "helpers.hpp"

using namespace girth;
using namespace testing;

TEST_CASE("k = 1 gives A_0 = V and A_1 empty") {
    const auto g = small_random(3);
    const auto ls = sample_hierarchy(g, 1, 5);
    REQUIRE(ls.sets.size() == 2);
    CHECK(ls.at(0).size() == g.vertex_count());
    CHECK(ls.at(1).empty());
}

TEST_CASE("single vertex with k = 3 is not clamped") {
    const auto g = make(1, {});
    const auto ls = sample_hierarchy(g, 3, 9);
    REQUIRE(ls.sets.size() == 4);
    CHECK(ls.at(0) == std::vector<VertexId>{0});
    CHECK(ls.at(1).size() <= 1);
    CHECK(ls.at(2).size() <= ls.at(1).size());
    CHECK(ls.at(3).empty());
}

TEST_CASE("k < 1 rejected") {
    CHECK_THROWS_AS(sample_hierarchy(unit_triangle(), 0, 1), std::invalid_argument);
}

TEST_CASE("inclusion frequency is n^(-1/k)") {
    // n = 4, k = 2: each vertex lands in A_1 with probability 1/2.
    const auto g = make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    std::vector<int> hits(4, 0);
    const int trials = 10000;
    for (int s = 0; s < trials; ++s) {
        const auto ls = sample_hierarchy(g, 2, static_cast<std::uint64_t>(s));
        for (VertexId v : ls.at(1)) ++hits[static_cast<std::size_t>(v)];
    }
    for (int h : hits) CHECK(std::abs(h / double(trials) - 0.5) <= 0.02);
}

TEST_CASE("nested and deterministic") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = small_random(seed, 30, 80);
        const auto a = sample_hierarchy(g, 3, seed);
        const auto b = sample_hierarchy(g, 3, seed);
        CHECK(a.sets == b.sets);
        for (int i = 0; i < 3; ++i)
            CHECK(std::includes(a.at(i).begin(), a.at(i).end(), a.at(i + 1).begin(),
                                a.at(i + 1).end()));
        CHECK(a.at(3).empty());
    }
}

TEST_CASE("max_useful_levels") {
    CHECK(max_useful_levels(1) == 1);
    CHECK(max_useful_levels(2) == 1);
    CHECK(max_useful_levels(3) == 2);
    CHECK(max_useful_levels(64) == 6);
    CHECK(max_useful_levels(65) == 7);
    CHECK(max_useful_levels(1024) == 10);
}

TEST_CASE("path 0-1-2 with A_1 = {2}") {
    const auto g = unit_path3();
    const auto h = compute_level_distances(g, levels_of(3, {{2}}));
    CHECK(h.level_dist(0, 1) == 2);
    CHECK(h.level_dist(1, 1) == 1);
    CHECK(h.level_dist(2, 1) == 0);
    CHECK(h.pivot(0, 1) == 2);
    const auto& pe = h.pivot_parent_edge(0, 1);
    CHECK(pe.from == 1);
    CHECK(pe.to == 0);
    CHECK(h.pivot_parent_edge(2, 1).from == kNoVertex);
    CHECK(h.level_of(2) == 1);
    CHECK(h.level_of(0) == 0);
    for (VertexId u = 0; u < 3; ++u) {
        CHECK(h.level_dist(u, 0) == 0);
        CHECK(h.pivot(u, 0) == u);
        CHECK(h.level_dist(u, 2) == kInfinity);
    }

    const auto store = seed_path_store(h);
    CHECK(store.d(2, 0) == 2);
    CHECK(store.d(2, 1) == 1);
    CHECK(store.d(2, 2) == 0);
    for (VertexId u = 0; u < 3; ++u) CHECK(store.d(u, u) == 0);
    CHECK(store.size() == 5);
    CHECK(store.pi(2, 0) == EdgeRef{1, 0, 1, g.find_edge(0, 1)});
    CHECK(store.d(0, 2) == kInfinity);
    CHECK(store.pi(0, 2).from == kNoVertex);
}

TEST_CASE("k = 1 store holds only d(u, u)") {
    const auto g = small_random(11);
    const auto h = compute_level_distances(g, sample_hierarchy(g, 1, 1));
    const auto store = seed_path_store(h);
    CHECK(store.size() == g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        CHECK(store.d(static_cast<VertexId>(v), static_cast<VertexId>(v)) == 0);
}

TEST_CASE("level distances and pivots against brute force") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = seed % 2 ? small_random(seed) : small_random_ties(seed);
        const oracle::AllPairs ap(g);
        for (int k : {2, 3, 4}) {
            const auto h = compute_level_distances(g, sample_hierarchy(g, k, seed));
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                const auto u = static_cast<VertexId>(v);
                double prev = 0.0;
                for (int i = 1; i < k; ++i) {
                    const auto& A = h.levels().at(i);
                    const double want = ap.to_set(u, A);
                    CHECK(h.level_dist(u, i) == want);
                    CHECK(h.level_dist(u, i) >= prev);
                    prev = h.level_dist(u, i);
                    if (want == kInfinity) {
                        CHECK(h.pivot(u, i) == kNoVertex);
                        continue;
                    }
                    VertexId best = kNoVertex;
                    for (VertexId a : A)
                        if (ap(a, u) == want) {
                            best = a;
                            break;  // A is sorted
                        }
                    CHECK(h.pivot(u, i) == best);
                    const auto& pe = h.pivot_parent_edge(u, i);
                    if (h.pivot(u, i) == u) {
                        CHECK(pe.from == kNoVertex);
                    } else {
                        REQUIRE(pe.to == u);
                        CHECK(h.level_dist(pe.from, i) + pe.length == h.level_dist(u, i));
                        CHECK(h.pivot(pe.from, i) == h.pivot(u, i));
                    }
                }
            }
        }
    }
}

TEST_CASE("seeded store entries are exact distances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = small_random_ties(seed);
        const oracle::AllPairs ap(g);
        const auto h = compute_level_distances(g, sample_hierarchy(g, 3, seed));
        const auto store = seed_path_store(h);
        for (std::size_t c = 0; c < g.vertex_count(); ++c)
            for (const auto& [v, e] : store.table(static_cast<VertexId>(c))) {
                CHECK(e.dist == ap(static_cast<VertexId>(c), v));
                if (e.parent.from != kNoVertex)
                    CHECK(store.d(static_cast<VertexId>(c), e.parent.from) + e.parent.length ==
                          e.dist);
            }
    }
}

TEST_CASE("disconnected levels read infinity") {
    // Component {0,1} holds the only A_1 member; {2,3} cannot reach it.
    const auto g = make(4, {{0, 1, 1}, {2, 3, 1}});
    const auto h = compute_level_distances(g, levels_of(4, {{0}}));
    CHECK(h.level_dist(1, 1) == 1);
    CHECK(h.level_dist(2, 1) == kInfinity);
    CHECK(h.pivot(3, 1) == kNoVertex);
    const auto store = seed_path_store(h);
    CHECK(store.size() == 4 + 1);  // d(0,0) is shared by both levels
}

TEST_CASE("rng") {
    Rng a(1), b(1);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(5);
    for (int i = 0; i < 1000; ++i) {
        const double x = r.uniform();
        CHECK((x >= 0.0 && x < 1.0));
        CHECK(r.below(7) < 7);
    }
    CHECK(derive_seed(1, 1) != derive_seed(1, 2));
    CHECK(derive_seed(1, 1) != derive_seed(2, 1));
}
