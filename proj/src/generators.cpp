#include "girth/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "girth/hierarchy.hpp"

namespace girth::gen {

namespace {

double draw_length(Rng& rng, LengthRange r) {
    if (r.wmin == r.wmax) return r.wmax;
    // (wmin, wmax]: 1 - uniform() lies in (0, 1].
    return r.wmin + (r.wmax - r.wmin) * (1.0 - rng.uniform());
}

void check_range(LengthRange r) {
    if (!(r.wmin >= 0.0) || !(r.wmax > 0.0) || !(r.wmin <= r.wmax) || !std::isfinite(r.wmax))
        throw std::invalid_argument("length range must satisfy 0 <= wmin <= wmax, wmax > 0");
}

std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::vector<EdgeInput> tree_edges(std::size_t n, LengthRange lengths, Rng& rng) {
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<EdgeInput> edges;
    for (std::size_t i = 1; i < n; ++i)
        edges.push_back({perm[rng.below(i)], perm[i], draw_length(rng, lengths)});
    return edges;
}

std::vector<std::size_t> hop_distances(std::size_t n,
                                       const std::vector<std::vector<VertexId>>& adj,
                                       VertexId s, std::size_t cap) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::queue<VertexId> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        const auto dx = dist[static_cast<std::size_t>(x)];
        if (dx >= cap) continue;
        for (VertexId y : adj[static_cast<std::size_t>(x)])
            if (dist[static_cast<std::size_t>(y)] == SIZE_MAX) {
                dist[static_cast<std::size_t>(y)] = dx + 1;
                q.push(y);
            }
    }
    return dist;
}

}  // namespace

WeightedGraph gnp(std::size_t n, double p, LengthRange lengths, std::uint64_t seed) {
    check_range(lengths);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    Rng rng(derive_seed(seed, 11));
    std::vector<EdgeInput> edges;
    if (p > 0.0 && n > 1) {
        // Batagelj–Brandes: walk the lower triangle with geometric gaps.
        const double log_q = std::log1p(-p);
        long long v = 1, w = -1;
        const auto nn = static_cast<long long>(n);
        while (v < nn) {
            const double r = 1.0 - rng.uniform();
            const long long skip = p == 1.0 ? 0 : static_cast<long long>(std::floor(std::log(r) / log_q));
            w += 1 + skip;
            while (w >= v && v < nn) {
                w -= v;
                ++v;
            }
            if (v < nn)
                edges.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v),
                                 draw_length(rng, lengths)});
        }
    }
    return build_graph(n, edges);
}

WeightedGraph random_connected(std::size_t n, std::size_t extra_edges, LengthRange lengths,
                               std::uint64_t seed) {
    check_range(lengths);
    Rng rng(derive_seed(seed, 12));
    auto edges = tree_edges(n, lengths, rng);
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : edges) seen.insert(key(e.u, e.v));
    const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t target = std::min(max_edges, edges.size() + extra_edges);
    while (edges.size() < target) {
        const auto a = static_cast<VertexId>(rng.below(n));
        const auto b = static_cast<VertexId>(rng.below(n));
        if (a == b || !seen.insert(key(a, b)).second) continue;
        edges.push_back({a, b, draw_length(rng, lengths)});
    }
    return build_graph(n, edges);
}

WeightedGraph grid(std::size_t rows, std::size_t cols, LengthRange lengths, std::uint64_t seed) {
    check_range(lengths);
    Rng rng(derive_seed(seed, 13));
    std::vector<EdgeInput> edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_length(rng, lengths)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_length(rng, lengths)});
        }
    return build_graph(rows * cols, edges);
}

WeightedGraph named(const std::string& name) {
    std::vector<EdgeInput> e;
    auto add = [&](int a, int b) { e.push_back({a, b, 1.0}); };
    if (name == "petersen") {
        for (int i = 0; i < 5; ++i) {
            add(i, (i + 1) % 5);          // outer 5-cycle
            add(i, i + 5);                // spokes
            add(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        }
        return build_graph(10, e);
    }
    if (name == "heawood") {
        // 14-cycle with chords i -> i + 5 from even vertices.
        for (int i = 0; i < 14; ++i) add(i, (i + 1) % 14);
        for (int i = 0; i < 14; i += 2) add(i, (i + 5) % 14);
        return build_graph(14, e);
    }
    if (name == "k33") {
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) add(a, b);
        return build_graph(6, e);
    }
    if (name == "triangle") {
        add(0, 1);
        add(1, 2);
        add(0, 2);
        return build_graph(3, e);
    }
    if (name.rfind("cycle", 0) == 0 && name.size() > 5) {
        const int len = std::stoi(name.substr(5));
        if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
        for (int i = 0; i < len; ++i) add(i, (i + 1) % len);
        return build_graph(static_cast<std::size_t>(len), e);
    }
    throw std::invalid_argument("unknown named graph '" + name + "'");
}

WeightedGraph random_high_girth(std::size_t n, std::size_t target_edges, int min_girth,
                                std::uint64_t seed) {
    if (n < 3 || min_girth < 3)
        throw std::invalid_argument("need n >= 3 and min_girth >= 3");
    Rng rng(derive_seed(seed, 14));
    auto edges = tree_edges(n, {1.0, 1.0}, rng);
    std::vector<std::vector<VertexId>> adj(n);
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        seen.insert(key(e.u, e.v));
    }
    const auto need = static_cast<std::size_t>(min_girth - 1);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 50 * n * n;
    while ((edges.size() < target_edges || edges.size() < n) && attempts++ < max_attempts) {
        const auto a = static_cast<VertexId>(rng.below(n));
        const auto b = static_cast<VertexId>(rng.below(n));
        if (a == b || seen.contains(key(a, b))) continue;
        const auto d = hop_distances(n, adj, a, need);
        if (d[static_cast<std::size_t>(b)] < need) continue;
        seen.insert(key(a, b));
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        edges.push_back({a, b, 1.0});
    }
    if (edges.size() < n) throw std::runtime_error("could not close a cycle at the requested girth");
    return build_graph(n, edges);
}

namespace {

PlantedCycleInstance planted_cycle(std::size_t n, std::size_t extra_edges, std::size_t cycle_len,
                                   std::uint64_t seed, bool heavy) {
    if (cycle_len < 3 || cycle_len > n) throw std::invalid_argument("need 3 <= cycle_len <= n");
    Rng rng(derive_seed(seed, heavy ? 16 : 15));

    std::vector<double> lens;
    if (!heavy) {
        for (std::size_t j = 0; j < cycle_len; ++j)
            lens.push_back(cycle_len == 3 ? 1.0 : rng.uniform(1.0, 1.25));
    } else {
        double light = 0.0;
        for (std::size_t j = 0; j + 1 < cycle_len; ++j) {
            lens.push_back(rng.uniform(1.0, 1.25));
            light += lens.back();
        }
        // H >= 0.75 * light exceeds every light edge and gives 2H > light.
        const auto pos = static_cast<std::ptrdiff_t>(rng.below(cycle_len));
        lens.insert(lens.begin() + pos, light * rng.uniform(0.75, 3.0));
    }
    double g = 0.0, mx = 0.0;
    for (double l : lens) {
        g += l;
        mx = std::max(mx, l);
    }

    const double background = g + 1.0;
    const auto base =
        random_connected(n, extra_edges, {background, 2.0 * background}, derive_seed(seed, 17));

    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<VertexId> cyc(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(cycle_len));

    std::map<std::uint64_t, EdgeInput> edges;
    for (const auto& e : base.edges()) edges[key(e.from, e.to)] = {e.from, e.to, e.length};
    for (std::size_t j = 0; j < cycle_len; ++j) {
        const VertexId a = cyc[j];
        const VertexId b = cyc[(j + 1) % cycle_len];
        edges[key(a, b)] = {a, b, lens[j]};
    }
    std::vector<EdgeInput> list;
    for (const auto& [k, e] : edges) list.push_back(e);

    PlantedCycleInstance inst{build_graph(n, list), std::move(cyc), g, mx};
    return inst;
}

}  // namespace

PlantedCycleInstance light_cycle_instance(std::size_t n, std::size_t extra_edges,
                                          std::size_t cycle_len, std::uint64_t seed) {
    return planted_cycle(n, extra_edges, cycle_len, seed, false);
}

PlantedCycleInstance heavy_edge_instance(std::size_t n, std::size_t extra_edges,
                                         std::size_t cycle_len, std::uint64_t seed) {
    return planted_cycle(n, extra_edges, cycle_len, seed, true);
}

}  // namespace girth::gen
