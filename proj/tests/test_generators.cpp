#include <doctest.h>

#include "girth/oracles.hpp"
#include "girth/verify.hpp"
#include "helpers.hpp"

using namespace girth;
using namespace testing;

TEST_CASE("gnp lengths and determinism") {
    const auto a = gen::gnp(50, 0.1, {0.1, 1.0}, 3);
    const auto b = gen::gnp(50, 0.1, {0.1, 1.0}, 3);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));
    CHECK(a.vertex_count() == 50);
    for (const auto& e : a.edges()) {
        CHECK(e.length > 0.1);
        CHECK(e.length <= 1.0);
    }
    // Expected 0.1 * 1225 edges.
    CHECK(a.edge_count() > 60);
    CHECK(a.edge_count() < 200);
    CHECK(gen::gnp(20, 0.0, {0, 1}, 1).edge_count() == 0);
    CHECK(gen::gnp(20, 1.0, {0, 1}, 1).edge_count() == 190);
    CHECK_THROWS_AS(gen::gnp(5, 1.5, {0, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen::gnp(5, 0.5, {2, 1}, 1), std::invalid_argument);
}

TEST_CASE("grid and named graphs") {
    const auto g = gen::grid(3, 4, {1, 1}, 1);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 17);
    CHECK(oracle::exact_girth(g) == 4);
    const auto p = gen::named("petersen");
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(gen::named("heawood").edge_count() == 21);
    CHECK(oracle::exact_girth(gen::named("k33")) == 4);
    CHECK(oracle::exact_girth(gen::named("cycle7")) == 7);
    CHECK_THROWS_AS(gen::named("nope"), std::invalid_argument);
    CHECK_THROWS_AS(gen::named("cycle2"), std::invalid_argument);
}

TEST_CASE("random connected graphs are connected") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = gen::random_connected(40, 20, {0, 1}, seed);
        CHECK(g.edge_count() == 59);
        const auto d = oracle::dijkstra(g, 0);
        for (double x : d) CHECK(x < kInfinity);
    }
}

TEST_CASE("high girth generator") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = gen::random_high_girth(25, 35, 5, seed);
        const double girth = oracle::exact_girth(g);
        CHECK(girth >= 5);
        CHECK(girth < kInfinity);
    }
}

TEST_CASE("planted cycle instances land in their regimes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t c = 3 + seed % 6;
        const auto light = gen::light_cycle_instance(40, 30, c, seed);
        CHECK(oracle::exact_girth(light.graph) == doctest::Approx(light.cycle_length));
        CHECK(light.max_edge <= light.cycle_length / 3);
        const auto heavy = gen::heavy_edge_instance(40, 30, c, seed);
        CHECK(oracle::exact_girth(heavy.graph) == doctest::Approx(heavy.cycle_length));
        CHECK(heavy.max_edge > heavy.cycle_length / 3);
    }
}

TEST_CASE("verify driver on a small corpus") {
    VerifyConfig cfg;
    cfg.random_trials = 10;
    cfg.adversarial_trials = 3;
    cfg.n_max = 40;
    const auto cases = make_verify_corpus(cfg);
    CHECK(cases.size() == 16);
    const auto rep = run_verify(cases, cfg);
    CHECK(rep.ok());
    for (int k : {1, 2, 3}) {
        CHECK(rep.per_k.at(k).runs == 16);
        CHECK(rep.per_k.at(k).max_ratio <= 4.0 * k / 3.0);
    }
    CHECK(rep.heavy_cases_in_regime >= 3);
    CHECK(rep.light_cases_in_regime >= 3);
}

TEST_CASE("cluster stats on forests with k = 1") {
    // gnp with tiny degree is mostly a forest; k = 1 clusters are whole components,
    // so the explored sum is at most n^2.
    const auto row = cluster_size_stats(64, 1, 2, 0.5, 1, true);
    CHECK(row.k == 1);
    CHECK(row.mean_explored <= 64.0 * 64.0);
    CHECK(row.mean_explored >= 64.0);
    CHECK(row.mean_full >= row.mean_explored);
    const auto clamped = cluster_size_stats(64, 7, 1, 4, 1, false);
    CHECK(clamped.k == 6);
    CHECK(clamped.requested_k == 7);
}
