#pragma once

#include <vector>

#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"

// Deliberately simple reference implementations. Nothing here is fast, and
// nothing here calls into the approximation pipeline.
namespace girth::oracle {

/// Plain Dijkstra; lengths are summed outward from `source`.
std::vector<double> dijkstra(const WeightedGraph& g, VertexId source,
                             EdgeId skip_edge = kNoEdge);

/// dist[s][v], one Dijkstra per source.
class AllPairs {
public:
    explicit AllPairs(const WeightedGraph& g);
    double operator()(VertexId s, VertexId v) const {
        return dist_[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)];
    }
    /// min over a ∈ set of dist[a][v]; +inf for an empty set.
    double to_set(VertexId v, const std::vector<VertexId>& set) const;

private:
    std::vector<std::vector<double>> dist_;
};

/// min over edges (u, v) of δ_{G - e}(u, v) + ℓ(e); +inf for forests.
double exact_girth(const WeightedGraph& g);

/// Minimum length over all simple cycles, by exhaustive search. Tiny graphs only.
double girth_by_enumeration(const WeightedGraph& g);

/// Every simple cycle as an edge-id list (each cycle once). Tiny graphs only.
std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const WeightedGraph& g);

/// Literal CL(u) from the set-builder definitions with level i = a(u):
///   V: δ(u, v) < δ(v, A_{i+1})
///   E: δ(u, v) + ℓ(v, w) < δ(w, A_{i+1}) for either orientation.
/// δ(v, A) is evaluated as min over a ∈ A of dist[a][v].
struct BruteCluster {
    VertexId center = kNoVertex;
    std::vector<VertexId> vertices;  // sorted
    std::vector<EdgeId> edges;       // sorted
    bool acyclic = true;
};

BruteCluster brute_cluster(const WeightedGraph& g, const Hierarchy& h, const AllPairs& ap,
                           VertexId u);

/// δ(u, (v, w)) = min(δ(u, v), δ(u, w)) + ℓ(v, w).
double distance_to_edge(const WeightedGraph& g, const AllPairs& ap, VertexId u, EdgeId e);

/// Smallest r such that CL(u) ∩ G_r(u) contains a cycle; +inf if none.
double smallest_cycle_radius(const WeightedGraph& g, const Hierarchy& h, const AllPairs& ap,
                             VertexId u);

/// Incident edges of v with ℓ(v, w) - δ(w, A_{i+1}) < y0, sorted by
/// (length, neighbor id), oriented away from v.
std::vector<EdgeRef> brute_eligible_edges(const WeightedGraph& g, const Hierarchy& h,
                                          VertexId v, int level, double y0);

struct BallGraph {
    VertexId center = kNoVertex;
    double radius = 0.0;
    bool open = false;
    std::vector<VertexId> vertices;  // sorted
    std::vector<EdgeId> edges;       // sorted
};

/// G_r(u) (or G_{<r}(u) when open) from the definitions.
BallGraph ball_graph(const WeightedGraph& g, const AllPairs& ap, VertexId u, double r,
                     bool open);

/// Whether the undirected edge set contains a cycle (union-find).
bool has_cycle(std::size_t n, const WeightedGraph& g, const std::vector<EdgeId>& edges);

}  // namespace girth::oracle
