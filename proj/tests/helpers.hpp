#pragma once

#include <initializer_list>
#include <vector>

#include "girth/generators.hpp"
#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"

namespace testing {

using namespace girth;

inline WeightedGraph make(std::size_t n, std::initializer_list<EdgeInput> edges) {
    std::vector<EdgeInput> list(edges);
    return build_graph(n, list);
}

inline WeightedGraph unit_triangle() { return make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
inline WeightedGraph unit_path3() { return make(3, {{0, 1, 1}, {1, 2, 1}}); }
inline WeightedGraph c4_1234() { return make(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}}); }

/// Level sets [V, inner..., {}] for an explicit hierarchy.
inline LevelSets levels_of(std::size_t n, std::vector<std::vector<VertexId>> inner) {
    LevelSets ls;
    ls.k = static_cast<int>(inner.size()) + 1;
    std::vector<VertexId> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);
    ls.sets.push_back(all);
    for (auto& s : inner) ls.sets.push_back(s);
    ls.sets.push_back({});
    return ls;
}

/// Small random connected graph, lengths in (0, 1].
inline WeightedGraph small_random(std::uint64_t seed, std::size_t n_lo = 5, std::size_t n_hi = 50) {
    Rng rng(derive_seed(seed, 424242));
    const auto n = n_lo + rng.below(n_hi - n_lo + 1);
    const auto extra = static_cast<std::size_t>(static_cast<double>(n) * rng.uniform(0.2, 1.5));
    return gen::random_connected(n, extra, {0.0, 1.0}, seed);
}

/// Same, but with a few repeated small-integer lengths so that distance ties
/// and equality cases in strict comparisons actually happen.
inline WeightedGraph small_random_ties(std::uint64_t seed, std::size_t n_lo = 5,
                                       std::size_t n_hi = 40) {
    Rng rng(derive_seed(seed, 77));
    const auto n = n_lo + rng.below(n_hi - n_lo + 1);
    const auto shape = small_random(seed, n, n);
    std::vector<EdgeInput> edges;
    for (const auto& e : shape.edges())
        edges.push_back({e.from, e.to, static_cast<double>(1 + rng.below(3))});
    return build_graph(shape.vertex_count(), edges);
}

}  // namespace testing
