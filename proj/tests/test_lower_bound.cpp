#include <doctest.h>

#include <json.hpp>

#include "girth/lower_bound.hpp"
#include "girth/oracles.hpp"
#include "helpers.hpp"

using namespace girth;
using namespace testing;

TEST_CASE("Petersen planting") {
    const auto inst = lb::plant(gen::named("petersen"), 0.1);
    CHECK(inst.n == 30);
    CHECK(inst.S.size() == 20);
    CHECK(inst.g0 == 5);
    CHECK(inst.plantable.size() == 10);
    for (const auto& r : inst.replicas) CHECK(r.size() == 2);
    const auto rep = lb::verify_planting(inst);
    CHECK(rep.ok());
    CHECK(rep.girth >= 5);

    const auto& g = *inst.graph;
    for (VertexId s : inst.S) {
        int eps = 0, five = 0, unit = 0;
        for (const auto& a : g.neighbors(s)) {
            if (a.length == 0.1) ++eps;
            else if (a.length == 5) ++five;
            else if (a.length == 1) ++unit;
        }
        CHECK(eps == 1);
        CHECK(five == 1);
        CHECK(unit >= 1);
        CHECK(unit <= 2);
    }
}

TEST_CASE("replanting one edge") {
    const auto inst = lb::plant(gen::named("petersen"), 0.1);
    const EdgeId e = inst.plantable.front();
    CHECK(oracle::exact_girth(lb::replant_edge(inst, e, 1.0)) == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(oracle::exact_girth(lb::replant_edge(inst, e, inst.g0)) == oracle::exact_girth(*inst.graph));
    CHECK(oracle::exact_girth(lb::replant_edge(inst, e, 10 * inst.g0)) >= inst.g0);
    CHECK_THROWS_AS(lb::replant_edge(inst, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lb::replant_edge(inst, e, 0.5), std::invalid_argument);
}

TEST_CASE("cycle base meets the lower size bound") {
    const auto inst = lb::plant(gen::named("cycle8"), 0.25);
    CHECK(inst.n == 3 * 8);
    CHECK(inst.g0 == 8);
    CHECK(lb::verify_planting(inst).ok());
}

TEST_CASE("named and random high-girth bases") {
    for (const char* name : {"heawood", "k33"}) {
        const auto inst = lb::plant(gen::named(name), 0.1);
        const auto rep = lb::verify_planting(inst);
        CHECK_MESSAGE(rep.ok(), name);
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto base = gen::random_high_girth(16, 24, 4, seed);
        CHECK(oracle::exact_girth(base) >= 4);
        const auto rep = lb::verify_planting(lb::plant(base, 0.1));
        CHECK(rep.ok());
    }
}

TEST_CASE("plant rejects bad input") {
    CHECK_THROWS_AS(lb::plant(gen::named("petersen"), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lb::plant(gen::named("petersen"), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lb::plant(unit_path3(), 0.1), std::invalid_argument);
    CHECK_THROWS_AS(lb::plant(c4_1234(), 0.1), std::invalid_argument);
    const auto a = lb::plant(gen::named("petersen"), 0.0, {.analysis_mode = true});
    CHECK_FALSE(a.graph);
    CHECK(a.n == 30);
}

TEST_CASE("round-robin replica assignment") {
    // C4: every vertex has degree 2 and n_v = 2. The first incident edge goes to
    // replica 2, the second to replica 1.
    const auto base = make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    const auto inst = lb::plant(base, 0.5);
    const auto& r0 = inst.replicas[0];
    const auto first = base.neighbors(0)[0];  // to 1
    const auto second = base.neighbors(0)[1]; // to 3
    const auto& e1 = inst.edges[static_cast<std::size_t>(first.edge)];
    const auto& e2 = inst.edges[static_cast<std::size_t>(second.edge)];
    CHECK((e1.u == r0[1] || e1.v == r0[1]));
    CHECK((e2.u == r0[0] || e2.v == r0[0]));
}

TEST_CASE("access oracle") {
    const auto inst = lb::plant(gen::named("petersen"), 0.1);
    lb::AccessOracle o(inst);
    const auto s = static_cast<std::size_t>(inst.S.front());
    CHECK(o.counter(s) == 1);
    const auto deg = o.degree(s);
    CHECK(o.queries() == 1);
    CHECK((deg == 3 || deg == 4));
    CHECK(o.degree(static_cast<std::size_t>(inst.hub[0])) == 2);

    auto e = o.next_edge(s);
    REQUIRE(e);
    CHECK(e->length == 0.1);
    double last = e->length;
    for (std::size_t j = 1; j < deg; ++j) {
        e = o.next_edge(s);
        REQUIRE(e);
        CHECK(e->length >= last);
        last = e->length;
    }
    CHECK(last == 5);
    CHECK(o.counter(s) == deg + 1);
    const auto before = o.queries();
    CHECK_FALSE(o.next_edge(s));
    CHECK(o.queries() == before);
    CHECK_THROWS_AS(o.degree(inst.n), std::out_of_range);
    CHECK_THROWS_AS(o.next_edge(inst.n), std::out_of_range);
}

TEST_CASE("access replay is deterministic") {
    const auto inst = lb::plant(gen::named("heawood"), 0.1);
    lb::AccessOracle a(inst), b(inst);
    Rng rng(3);
    for (int q = 0; q < 300; ++q) {
        const auto j = rng.below(inst.n);
        auto x = a.next_edge(j);
        auto y = b.next_edge(j);
        CHECK(x.has_value() == y.has_value());
        if (x) CHECK(*x == *y);
    }
    CHECK(a.revealed_count() == b.revealed_count());
}

TEST_CASE("access experiments") {
    const auto inst = lb::plant(gen::named("petersen"), 0.1);
    const auto m = inst.edges.size();
    for (const char* name : {"round-robin", "sequential", "degree-first"}) {
        auto zero = lb::make_strategy(name);
        const auto r0 = lb::run_access_experiment(inst, 0, *zero);
        CHECK(r0.queries_used == 0);
        CHECK(r0.edges_revealed == 0);
        CHECK(r0.fraction_plantable_unseen == 1.0);

        auto full = lb::make_strategy(name);
        const auto rf = lb::run_access_experiment(inst, 2 * m + inst.n, *full);
        CHECK(rf.edges_revealed == m);
        CHECK(rf.plantable_revealed == rf.plantable_total);
    }
    auto rr = lb::make_round_robin();
    const auto all = lb::run_access_experiment(inst, 2 * m, *rr);
    CHECK(all.edges_revealed == m);

    // One edge per vertex: every replica shows its ε-edge first.
    auto rr2 = lb::make_round_robin();
    const auto part = lb::run_access_experiment(inst, inst.n - 1, *rr2);
    CHECK(part.plantable_revealed < part.plantable_total);
    CHECK_THROWS_AS(lb::make_strategy("nope"), std::invalid_argument);
}

TEST_CASE("sidecar json") {
    const auto inst = lb::plant(gen::named("petersen"), 0.1);
    const auto j = nlohmann::json::parse(lb::planted_sidecar_json(inst));
    CHECK(j["S"].size() == 20);
    CHECK(j["epsilon"] == 0.1);
    CHECK(j["g0"] == 5.0);
    CHECK(j["plantable"].size() == 10);
}
