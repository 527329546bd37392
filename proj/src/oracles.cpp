#include "girth/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace girth::oracle {

std::vector<double> dijkstra(const WeightedGraph& g, VertexId source, EdgeId skip_edge) {
    std::vector<double> dist(g.vertex_count(), kInfinity);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[static_cast<std::size_t>(source)] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d > dist[static_cast<std::size_t>(x)]) continue;
        for (const auto& a : g.neighbors(x)) {
            if (a.edge == skip_edge) continue;
            const double nd = d + a.length;
            auto& slot = dist[static_cast<std::size_t>(a.neighbor)];
            if (nd < slot) {
                slot = nd;
                pq.emplace(nd, a.neighbor);
            }
        }
    }
    return dist;
}

AllPairs::AllPairs(const WeightedGraph& g) {
    dist_.reserve(g.vertex_count());
    for (std::size_t s = 0; s < g.vertex_count(); ++s)
        dist_.push_back(dijkstra(g, static_cast<VertexId>(s)));
}

double AllPairs::to_set(VertexId v, const std::vector<VertexId>& set) const {
    double best = kInfinity;
    for (VertexId a : set) best = std::min(best, (*this)(a, v));
    return best;
}

double exact_girth(const WeightedGraph& g) {
    double best = kInfinity;
    for (const auto& e : g.edges()) {
        // Dijkstra in G - e from e.from, cut off once nothing shorter can appear.
        std::vector<double> dist(g.vertex_count(), kInfinity);
        using Item = std::pair<double, VertexId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[static_cast<std::size_t>(e.from)] = 0.0;
        pq.emplace(0.0, e.from);
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (d > dist[static_cast<std::size_t>(x)]) continue;
            if (!(d + e.length < best)) break;
            if (x == e.to) {
                best = d + e.length;
                break;
            }
            for (const auto& a : g.neighbors(x)) {
                if (a.edge == e.id) continue;
                const double nd = d + a.length;
                auto& slot = dist[static_cast<std::size_t>(a.neighbor)];
                if (nd < slot) {
                    slot = nd;
                    pq.emplace(nd, a.neighbor);
                }
            }
        }
    }
    return best;
}

std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const WeightedGraph& g) {
    // Each cycle is rooted at its smallest vertex s and walked from s; the
    // two traversal directions are deduplicated by comparing end edge ids.
    std::vector<std::vector<EdgeId>> cycles;
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<EdgeId> path;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId s, VertexId x) {
        for (const auto& a : g.neighbors(x)) {
            const VertexId y = a.neighbor;
            if (y < s) continue;
            if (y == s) {
                if (path.size() >= 2 && a.edge != path.front() && path.front() < a.edge) {
                    auto cyc = path;
                    cyc.push_back(a.edge);
                    cycles.push_back(std::move(cyc));
                }
                continue;
            }
            if (on_path[static_cast<std::size_t>(y)]) continue;
            on_path[static_cast<std::size_t>(y)] = 1;
            path.push_back(a.edge);
            dfs(s, y);
            path.pop_back();
            on_path[static_cast<std::size_t>(y)] = 0;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on_path[s] = 1;
        dfs(static_cast<VertexId>(s), static_cast<VertexId>(s));
        on_path[s] = 0;
    }
    return cycles;
}

double girth_by_enumeration(const WeightedGraph& g) {
    double best = kInfinity;
    for (const auto& cyc : enumerate_simple_cycles(g)) {
        double len = 0.0;
        for (EdgeId e : cyc) len += g.edge(e).length;
        best = std::min(best, len);
    }
    return best;
}

bool has_cycle(std::size_t n, const WeightedGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId id : edges) {
        const auto& e = g.edge(id);
        const auto a = find(static_cast<std::size_t>(e.from));
        const auto b = find(static_cast<std::size_t>(e.to));
        if (a == b) return true;
        parent[a] = b;
    }
    return false;
}

BruteCluster brute_cluster(const WeightedGraph& g, const Hierarchy& h, const AllPairs& ap,
                           VertexId u) {
    const int next = h.level_of(u) + 1;
    const std::vector<VertexId> empty;
    const auto& upper = next < h.k() ? h.levels().at(next) : empty;
    const std::size_t n = g.vertex_count();
    std::vector<double> to_upper(n);
    for (std::size_t v = 0; v < n; ++v) to_upper[v] = ap.to_set(static_cast<VertexId>(v), upper);

    BruteCluster c;
    c.center = u;
    for (std::size_t v = 0; v < n; ++v)
        if (ap(u, static_cast<VertexId>(v)) < to_upper[v]) c.vertices.push_back(static_cast<VertexId>(v));
    for (const auto& e : g.edges()) {
        const bool fwd = ap(u, e.from) + e.length < to_upper[static_cast<std::size_t>(e.to)];
        const bool bwd = ap(u, e.to) + e.length < to_upper[static_cast<std::size_t>(e.from)];
        if (fwd || bwd) c.edges.push_back(e.id);
    }
    c.acyclic = !has_cycle(n, g, c.edges);
    return c;
}

double distance_to_edge(const WeightedGraph& g, const AllPairs& ap, VertexId u, EdgeId id) {
    const auto& e = g.edge(id);
    return std::min(ap(u, e.from), ap(u, e.to)) + e.length;
}

double smallest_cycle_radius(const WeightedGraph& g, const Hierarchy& h, const AllPairs& ap,
                             VertexId u) {
    const auto cl = brute_cluster(g, h, ap, u);
    if (cl.acyclic) return kInfinity;
    std::set<double> radii;
    for (EdgeId e : cl.edges) radii.insert(distance_to_edge(g, ap, u, e));
    for (double r : radii) {
        // CL(u) ∩ G_r(u): cluster edges within edge-distance r. Their endpoints
        // are cluster vertices within distance r, so the edge set decides.
        std::vector<EdgeId> inside;
        for (EdgeId e : cl.edges)
            if (distance_to_edge(g, ap, u, e) <= r) inside.push_back(e);
        if (has_cycle(g.vertex_count(), g, inside)) return r;
    }
    return kInfinity;
}

std::vector<EdgeRef> brute_eligible_edges(const WeightedGraph& g, const Hierarchy& h,
                                          VertexId v, int level, double y0) {
    std::vector<EdgeRef> out;
    for (const auto& a : g.neighbors(v)) {
        const double y = a.length - h.level_dist(a.neighbor, level + 1);
        if (y < y0) out.push_back({v, a.neighbor, a.length, a.edge});
    }
    std::sort(out.begin(), out.end(), [](const EdgeRef& a, const EdgeRef& b) {
        return a.length != b.length ? a.length < b.length : a.to < b.to;
    });
    return out;
}

BallGraph ball_graph(const WeightedGraph& g, const AllPairs& ap, VertexId u, double r,
                     bool open) {
    auto within = [&](double d) { return open ? d < r : d <= r; };
    BallGraph b;
    b.center = u;
    b.radius = r;
    b.open = open;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (within(ap(u, static_cast<VertexId>(v)))) b.vertices.push_back(static_cast<VertexId>(v));
    for (const auto& e : g.edges())
        if (within(distance_to_edge(g, ap, u, e.id))) b.edges.push_back(e.id);
    return b;
}

}  // namespace girth::oracle
