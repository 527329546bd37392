#include "girth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "girth/cluster_explorer.hpp"
#include "girth/generators.hpp"
#include "girth/girth_approx.hpp"
#include "girth/hierarchy.hpp"
#include "girth/oracles.hpp"

namespace girth {

std::string family_name(Family f) {
    switch (f) {
        case Family::random: return "random";
        case Family::light_cycle: return "light-cycle";
        case Family::heavy_edge: return "heavy-edge";
    }
    return "?";
}

std::vector<VerifyCase> make_verify_corpus(const VerifyConfig& cfg) {
    std::vector<VerifyCase> cases;
    Rng rng(derive_seed(cfg.seed, 101));
    auto pick_n = [&] { return cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1); };
    auto pick_extra = [&](std::size_t n) {
        // average degree between roughly 2.5 and 6
        return static_cast<std::size_t>(static_cast<double>(n) * rng.uniform(0.25, 2.0));
    };

    for (std::size_t t = 0; t < cfg.random_trials; ++t) {
        const auto n = pick_n();
        cases.push_back({"random-" + std::to_string(t), Family::random,
                         gen::random_connected(n, pick_extra(n), {0.0, 1.0},
                                               derive_seed(cfg.seed, 1000 + t))});
    }
    for (std::size_t t = 0; t < cfg.adversarial_trials; ++t) {
        const auto n = pick_n();
        const auto c = 3 + rng.below(6);
        cases.push_back({"light-" + std::to_string(t), Family::light_cycle,
                         gen::light_cycle_instance(n, pick_extra(n), c,
                                                   derive_seed(cfg.seed, 2000 + t)).graph});
    }
    for (std::size_t t = 0; t < cfg.adversarial_trials; ++t) {
        const auto n = pick_n();
        const auto c = 3 + rng.below(6);
        cases.push_back({"heavy-" + std::to_string(t), Family::heavy_edge,
                         gen::heavy_edge_instance(n, pick_extra(n), c,
                                                  derive_seed(cfg.seed, 3000 + t)).graph});
    }
    return cases;
}

namespace {

/// M(C) of some shortest cycle: the heaviest edge on the cycle closed by the
/// edge attaining the exact girth.
double max_edge_on_shortest_cycle(const WeightedGraph& g, double girth) {
    for (const auto& e : g.edges()) {
        const auto dist = oracle::dijkstra(g, e.from, e.id);
        if (dist[static_cast<std::size_t>(e.to)] + e.length != girth) continue;
        // Recover one shortest e.from -> e.to path in G - e by walking back.
        double mx = e.length;
        VertexId x = e.to;
        while (x != e.from) {
            bool stepped = false;
            for (const auto& a : g.neighbors(x)) {
                if (a.edge == e.id) continue;
                if (dist[static_cast<std::size_t>(a.neighbor)] + a.length ==
                    dist[static_cast<std::size_t>(x)]) {
                    mx = std::max(mx, a.length);
                    x = a.neighbor;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) break;
        }
        return mx;
    }
    return kInfinity;
}

}  // namespace

VerifyReport run_verify(const std::vector<VerifyCase>& cases, const VerifyConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    std::map<int, double> ratio_sum;
    std::size_t index = 0;
    for (const auto& c : cases) {
        ++rep.cases_per_family[family_name(c.family)];
        const double g = oracle::exact_girth(c.graph);
        if (g == kInfinity) ++rep.acyclic_cases;
        else {
            const double mc = max_edge_on_shortest_cycle(c.graph, g);
            if (mc > g / 3) ++rep.heavy_cases_in_regime;
            else ++rep.light_cases_in_regime;
        }

        for (int k : cfg.ks) {
            const auto result = approximate_girth(c.graph, k, derive_seed(cfg.seed, 50000 + index),
                                                  {.materialize = cfg.materialize});
            auto& st = rep.per_k[k];
            ++st.runs;
            std::ostringstream where;
            where << c.name << " (n=" << c.graph.vertex_count() << ", m=" << c.graph.edge_count()
                  << ", k=" << k << ")";

            if (g == kInfinity) {
                if (result.alpha != kInfinity) {
                    ++st.guarantee_failures;
                    rep.violations.push_back(where.str() + ": forest reported a cycle");
                }
                continue;
            }
            const double ratio = result.alpha / g;
            const double upper = (4.0 * result.k / 3.0) * g;
            st.max_ratio = std::max(st.max_ratio, ratio);
            ratio_sum[k] += ratio;
            if (result.alpha < g * (1 - cfg.relative_slack) ||
                result.alpha > upper * (1 + cfg.relative_slack)) {
                ++st.guarantee_failures;
                rep.violations.push_back(where.str() + ": alpha=" + format_length(result.alpha) +
                                         " g=" + format_length(g));
            }
            if (cfg.materialize) {
                std::string defect;
                if (!result.cycle) defect = "no materialized cycle";
                else {
                    defect = check_cycle(c.graph, *result.cycle);
                    if (defect.empty() &&
                        result.cycle->length > result.alpha * (1 + cfg.relative_slack))
                        defect = "cycle length " + format_length(result.cycle->length) +
                                 " exceeds alpha";
                }
                if (!defect.empty()) {
                    ++st.cycle_failures;
                    rep.cycle_violations.push_back(where.str() + ": " + defect);
                }
            }
        }
        ++index;
    }
    for (auto& [k, st] : rep.per_k) {
        const std::size_t cyclic = st.runs - rep.acyclic_cases;
        st.mean_ratio = cyclic ? ratio_sum[k] / static_cast<double>(cyclic) : 0.0;
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ClusterStatsRow cluster_size_stats(std::size_t n, int k, std::size_t seeds, double avg_degree,
                                   std::uint64_t seed, bool full) {
    ClusterStatsRow row;
    row.n = n;
    row.requested_k = k;
    row.k = std::min(k, max_useful_levels(n));
    row.seeds = seeds;
    row.bound = row.k * std::pow(static_cast<double>(n), 1.0 + 1.0 / row.k);
    const double p = n > 1 ? std::min(1.0, avg_degree / static_cast<double>(n - 1)) : 0.0;
    double explored = 0.0, total_full = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
        const auto g = gen::gnp(n, p, {0.0, 1.0}, derive_seed(seed, s));
        GirthApproximator approx(g, k, derive_seed(seed, 7000 + s));
        const auto result = approx.run();
        explored += static_cast<double>(result.diagnostics.cluster_members_total);
        if (full) {
            for (std::size_t u = 0; u < n; ++u)
                total_full += static_cast<double>(
                    full_cluster(g, approx.hierarchy(), static_cast<VertexId>(u)).size());
        }
    }
    row.mean_explored = explored / static_cast<double>(seeds);
    row.mean_full = total_full / static_cast<double>(seeds);
    return row;
}

}  // namespace girth
