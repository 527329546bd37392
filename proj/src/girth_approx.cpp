#include "girth/girth_approx.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace girth {

namespace {

int checked_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return k;
}

struct CenterSummary {
    std::optional<CycleWitness> cycle;
    std::size_t members = 0;
    ExploreStats stats;
};

void absorb(const CenterSummary& s, BestCycle& best, Diagnostics& diag) {
    diag.queue_insertions += s.stats.queue_insertions;
    diag.extractions += s.stats.extractions;
    diag.degenerate_skips += s.stats.degenerate_skips;
    diag.cursor_visits += s.stats.cursor_visits;
    diag.cluster_members_total += s.members;
    diag.max_cluster_members = std::max<std::uint64_t>(diag.max_cluster_members, s.members);
    if (s.cycle) {
        ++diag.clusters_with_cycle;
        if (best.offer(*s.cycle)) diag.alpha_trace.push_back(best.alpha);
    }
}

bool is_edge(const EdgeRef& e, VertexId from, VertexId to) {
    return e.from == from && e.to == to;
}

}  // namespace

GirthApproximator::GirthApproximator(const WeightedGraph& g, int k, std::uint64_t seed)
    : graph_(g), requested_k_(checked_k(k)), seed_(seed) {
    const int used = std::min(k, max_useful_levels(g.vertex_count()));
    hierarchy_ = compute_level_distances(g, sample_hierarchy(g, used, seed));
    index_ = build_index(g, hierarchy_);
    store_ = seed_path_store(hierarchy_);
}

GirthApproximator::GirthApproximator(const WeightedGraph& g, const LevelSets& levels)
    : graph_(g), requested_k_(checked_k(levels.k)) {
    hierarchy_ = compute_level_distances(g, levels);
    index_ = build_index(g, hierarchy_);
    store_ = seed_path_store(hierarchy_);
}

void GirthApproximator::cluster_phase(BestCycle& best, Diagnostics& diag,
                                      const ApproxOptions& options) {
    const std::size_t n = graph_.vertex_count();
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (!options.parallel || threads <= 1 || n < 2) {
        ClusterExplorer explorer(graph_, hierarchy_, index_);
        for (std::size_t u = 0; u < n; ++u) {
            auto out = explorer.run(store_, static_cast<VertexId>(u));
            absorb({out.cycle, out.members.size(), out.stats}, best, diag);
        }
        return;
    }

    // Each center writes only its own store partition; results are reduced
    // in vertex order afterwards so the outcome matches the serial run.
    std::vector<CenterSummary> summaries(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        ClusterExplorer explorer(graph_, hierarchy_, index_);
        for (std::size_t u; (u = next.fetch_add(1)) < n;) {
            auto out = explorer.run(store_, static_cast<VertexId>(u));
            summaries[u] = {out.cycle, out.members.size(), out.stats};
        }
    };
    std::vector<std::thread> pool;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& s : summaries) absorb(s, best, diag);
}

void edge_scan_phase(const WeightedGraph& g, const Hierarchy& h, const PathStore& store,
                     BestCycle& best, Diagnostics& diag) {
    for (const auto& edge : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            const EdgeRef vw = dir == 0 ? edge : edge.reversed();
            const VertexId v = vw.from;
            const VertexId w = vw.to;
            for (int i = 0; i < h.k(); ++i) {
                ++diag.candidates_scanned;
                const VertexId u = h.pivot(v, i);
                if (u == kNoVertex) continue;
                const auto* ev = store.find(u, v);
                const auto* ew = store.find(u, w);
                if (!ev || !ew) continue;
                const double candidate = ev->dist + vw.length + ew->dist;
                if (!(candidate < best.alpha)) continue;
                if (is_edge(ev->parent, w, v) || is_edge(ew->parent, v, w)) continue;
                best.offer(CycleWitness{u, v, w, vw, candidate});
                ++diag.edge_scan_improvements;
                diag.alpha_trace.push_back(best.alpha);
            }
        }
    }
}

ApproxResult GirthApproximator::run(const ApproxOptions& options) {
    ApproxResult result;
    result.k = k();
    result.requested_k = requested_k_;
    result.seed = seed_;
    result.n = graph_.vertex_count();
    result.m = graph_.edge_count();

    BestCycle best;
    cluster_phase(best, result.diagnostics, options);
    result.diagnostics.cluster_phase_alpha = best.alpha;
    edge_scan_phase(graph_, hierarchy_, store_, best, result.diagnostics);
    result.diagnostics.store_entries = store_.size();

    result.alpha = best.alpha;
    result.witness = best.witness;
    if (options.materialize && best.witness)
        result.cycle = materialize_cycle(store_, *best.witness, graph_);
    return result;
}

ApproxResult approximate_girth(const WeightedGraph& g, int k, std::uint64_t seed,
                               const ApproxOptions& options) {
    GirthApproximator approx(g, k, seed);
    return approx.run(options);
}

MaterializedCycle materialize_cycle(const PathStore& store, const CycleWitness& witness,
                                    const WeightedGraph& g) {
    const VertexId c = witness.center;
    const std::size_t limit = g.vertex_count() + 1;
    auto chain = [&](VertexId start) {
        std::vector<EdgeRef> up;  // edges oriented toward start, walked upward
        std::vector<VertexId> verts{start};
        VertexId x = start;
        while (x != c) {
            const auto* e = store.find(c, x);
            if (!e || e->parent.from == kNoVertex)
                throw std::logic_error("path store has no parent for vertex " +
                                       std::to_string(x) + " under center " +
                                       std::to_string(c));
            up.push_back(e->parent);
            x = e->parent.from;
            verts.push_back(x);
            if (verts.size() > limit) throw std::logic_error("parent chain does not terminate");
        }
        return std::pair{verts, up};
    };
    auto [pv, ev] = chain(witness.v);
    auto [pw, ew] = chain(witness.w);

    std::unordered_map<VertexId, std::size_t> pos_in_v;
    for (std::size_t j = 0; j < pv.size(); ++j) pos_in_v.emplace(pv[j], j);
    std::size_t jw = 0;
    while (!pos_in_v.contains(pw[jw])) ++jw;  // the center is on both chains
    const std::size_t jv = pos_in_v.at(pw[jw]);

    MaterializedCycle cyc;
    // lca -> ... -> v
    for (std::size_t j = jv + 1; j-- > 0;) cyc.vertices.push_back(pv[j]);
    for (std::size_t j = jv; j-- > 0;) cyc.edges.push_back(ev[j]);
    // v -> w
    cyc.edges.push_back(witness.closing);
    // w -> ... -> just below lca, then back to lca
    for (std::size_t j = 0; j < jw; ++j) {
        cyc.vertices.push_back(pw[j]);
        cyc.edges.push_back(ew[j].reversed());
    }
    for (const auto& e : cyc.edges) cyc.length += e.length;
    return cyc;
}

std::string check_cycle(const WeightedGraph& g, const MaterializedCycle& c) {
    const std::size_t len = c.vertices.size();
    if (len < 3) return "cycle has fewer than 3 vertices";
    if (c.edges.size() != len) return "edge count differs from vertex count";
    std::unordered_set<VertexId> seen;
    double total = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        const VertexId a = c.vertices[j];
        const VertexId b = c.vertices[(j + 1) % len];
        if (!seen.insert(a).second) return "vertex " + std::to_string(a) + " repeats";
        const auto& e = c.edges[j];
        if (!((e.from == a && e.to == b) || (e.from == b && e.to == a)))
            return "edge " + std::to_string(j) + " does not join consecutive vertices";
        const EdgeId id = g.find_edge(a, b);
        if (id == kNoEdge || id != e.id || g.edge(id).length != e.length)
            return "edge " + std::to_string(a) + "-" + std::to_string(b) + " not in graph";
        total += e.length;
    }
    if (total != c.length) return "recorded length differs from edge sum";
    return {};
}

std::string result_to_json(const ApproxResult& r, int indent) {
    using nlohmann::json;
    json j;
    j["alpha"] = r.witness ? json(r.alpha) : json(nullptr);
    if (r.witness)
        j["witness"] = {{"u", r.witness->center},
                        {"v", r.witness->v},
                        {"w", r.witness->w},
                        {"bound", r.witness->bound}};
    else
        j["witness"] = nullptr;
    if (r.cycle) {
        j["cycle"] = r.cycle->vertices;
        j["cycle_length"] = r.cycle->length;
    }
    j["k"] = r.k;
    j["requested_k"] = r.requested_k;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["m"] = r.m;
    const auto& d = r.diagnostics;
    j["diagnostics"] = {
        {"queue_insertions", d.queue_insertions},
        {"extractions", d.extractions},
        {"degenerate_skips", d.degenerate_skips},
        {"cursor_visits", d.cursor_visits},
        {"cluster_members_total", d.cluster_members_total},
        {"max_cluster_members", d.max_cluster_members},
        {"clusters_with_cycle", d.clusters_with_cycle},
        {"candidates_scanned", d.candidates_scanned},
        {"edge_scan_improvements", d.edge_scan_improvements},
        {"store_entries", d.store_entries},
        {"cluster_phase_alpha",
         d.cluster_phase_alpha == kInfinity ? json(nullptr) : json(d.cluster_phase_alpha)},
    };
    return j.dump(indent);
}

}  // namespace girth
