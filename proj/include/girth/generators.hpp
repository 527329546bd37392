#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girth/graph.hpp"

namespace girth::gen {

/// Lengths drawn uniformly from (wmin, wmax]; wmin = wmax gives constant lengths.
struct LengthRange {
    double wmin = 0.0;
    double wmax = 1.0;
};

/// G(n, p) by geometric skipping, O(n + m) expected.
WeightedGraph gnp(std::size_t n, double p, LengthRange lengths, std::uint64_t seed);

/// Random spanning tree (each vertex attaches to a uniform earlier vertex)
/// plus `extra_edges` distinct random non-tree edges. Always connected.
WeightedGraph random_connected(std::size_t n, std::size_t extra_edges, LengthRange lengths,
                               std::uint64_t seed);

/// rows x cols grid.
WeightedGraph grid(std::size_t rows, std::size_t cols, LengthRange lengths, std::uint64_t seed);

/// Unit-length named graphs: petersen, heawood, k33, cycle<N> (e.g. cycle8),
/// triangle. Throws std::invalid_argument for unknown names.
WeightedGraph named(const std::string& name);

/// Unit-length connected graph on n vertices with girth >= min_girth and at
/// least one cycle: a random tree plus random edges whose endpoints are at
/// hop distance >= min_girth - 1, up to `target_edges` edges in total.
WeightedGraph random_high_girth(std::size_t n, std::size_t target_edges, int min_girth,
                                std::uint64_t seed);

/// A planted shortest cycle in a graph whose other edges are long.
struct PlantedCycleInstance {
    WeightedGraph graph;
    std::vector<VertexId> cycle;  // vertices of the planted cycle, in order
    double cycle_length = 0.0;
    double max_edge = 0.0;        // M(C)
};

/// Random connected background with lengths in (background_min, 2 background_min]
/// and a planted cycle of `cycle_len` vertices whose edges are all light:
/// M(C) <= g / 3. The planted cycle is the unique shortest one.
PlantedCycleInstance light_cycle_instance(std::size_t n, std::size_t extra_edges,
                                          std::size_t cycle_len, std::uint64_t seed);

/// Same background, but one planted edge is heavy: M(C) > g / 3.
PlantedCycleInstance heavy_edge_instance(std::size_t n, std::size_t extra_edges,
                                         std::size_t cycle_len, std::uint64_t seed);

}  // namespace girth::gen
