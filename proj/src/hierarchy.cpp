#include "girth/hierarchy.hpp"

#include <bit>
#include <cmath>
#include <queue>
#include <tuple>

namespace girth {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    // Lemire's nearly divisionless method.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t phase) {
    std::uint64_t x = seed ^ (phase * 0xd1b54a32d192ed03ULL);
    splitmix64(x);
    return splitmix64(x);
}

int max_useful_levels(std::size_t n) {
    if (n <= 2) return 1;
    return static_cast<int>(std::bit_width(n - 1));  // ceil(log2 n)
}

LevelSets sample_hierarchy(const WeightedGraph& g, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::size_t n = g.vertex_count();
    LevelSets levels;
    levels.k = k;
    levels.sets.resize(static_cast<std::size_t>(k) + 1);
    auto& all = levels.sets[0];
    all.resize(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);

    const double p = n == 0 ? 0.0 : std::pow(static_cast<double>(n), -1.0 / k);
    Rng rng(derive_seed(seed, 1));
    for (int i = 1; i < k; ++i) {
        const auto& prev = levels.sets[static_cast<std::size_t>(i) - 1];
        auto& cur = levels.sets[static_cast<std::size_t>(i)];
        for (VertexId v : prev)
            if (rng.bernoulli(p)) cur.push_back(v);
    }
    return levels;
}

Hierarchy compute_level_distances(const WeightedGraph& g, const LevelSets& levels) {
    const std::size_t n = g.vertex_count();
    const int k = levels.k;
    Hierarchy h;
    h.levels_ = levels;
    h.level_of_.assign(n, 0);
    for (int i = 1; i < k; ++i)
        for (VertexId v : levels.at(i)) h.level_of_[static_cast<std::size_t>(v)] = i;

    const auto kk = static_cast<std::size_t>(k);
    h.dist_.assign(n * kk, kInfinity);
    h.pivot_.assign(n * kk, kNoVertex);
    h.parent_.assign(n * kk, EdgeRef{});

    for (std::size_t v = 0; v < n; ++v) {
        h.dist_[v * kk] = 0.0;
        h.pivot_[v * kk] = static_cast<VertexId>(v);
    }

    // Label = (distance, pivot id); lexicographic order is preserved by adding
    // a positive length, so plain Dijkstra on labels is correct.
    using Label = std::tuple<double, VertexId, VertexId>;  // dist, pivot, vertex
    std::vector<double> dist(n);
    std::vector<VertexId> root(n);
    std::vector<EdgeRef> parent(n);
    std::vector<char> done(n);
    for (int i = 1; i < k; ++i) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::fill(root.begin(), root.end(), kNoVertex);
        std::fill(parent.begin(), parent.end(), EdgeRef{});
        std::fill(done.begin(), done.end(), 0);
        std::priority_queue<Label, std::vector<Label>, std::greater<>> pq;
        for (VertexId s : levels.at(i)) {
            dist[static_cast<std::size_t>(s)] = 0.0;
            root[static_cast<std::size_t>(s)] = s;
            pq.emplace(0.0, s, s);
        }
        while (!pq.empty()) {
            auto [d, r, x] = pq.top();
            pq.pop();
            const auto xi = static_cast<std::size_t>(x);
            if (done[xi]) continue;
            done[xi] = 1;
            for (const auto& a : g.neighbors(x)) {
                const auto yi = static_cast<std::size_t>(a.neighbor);
                if (done[yi]) continue;
                const double nd = d + a.length;
                if (nd < dist[yi] || (nd == dist[yi] && r < root[yi])) {
                    dist[yi] = nd;
                    root[yi] = r;
                    parent[yi] = EdgeRef{x, a.neighbor, a.length, a.edge};
                    pq.emplace(nd, r, a.neighbor);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t s = v * kk + static_cast<std::size_t>(i);
            h.dist_[s] = dist[v];
            h.pivot_[s] = root[v];
            h.parent_[s] = parent[v];
        }
    }
    return h;
}

std::size_t PathStore::size() const {
    std::size_t total = 0;
    for (const auto& t : tables_) total += t.size();
    return total;
}

PathStore seed_path_store(const Hierarchy& h) {
    const std::size_t n = h.vertex_count();
    PathStore store(n);
    for (int i = 0; i < h.k(); ++i) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto u = static_cast<VertexId>(v);
            const VertexId p = h.pivot(u, i);
            if (p == kNoVertex) continue;
            store.set(p, u, h.level_dist(u, i), h.pivot_parent_edge(u, i));
        }
    }
    return store;
}

}  // namespace girth
