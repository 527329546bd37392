#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"
#include "girth/range_index.hpp"

namespace girth {

/// Compact cycle: tree paths center→v and center→w in the PathStore plus the
/// closing edge (v, w). bound = d(center, v) + ℓ(v, w) + d(center, w).
struct CycleWitness {
    VertexId center = kNoVertex;
    VertexId v = kNoVertex;
    VertexId w = kNoVertex;
    EdgeRef closing;  // oriented v -> w
    double bound = kInfinity;
};

struct ExploreStats {
    std::uint64_t queue_insertions = 0;
    std::uint64_t extractions = 0;
    std::uint64_t degenerate_skips = 0;
    std::uint64_t cursor_visits = 0;
};

/// Result of one cluster exploration. `members` lists the finalized vertices
/// in discovery order; their distances and parent edges are in the store.
struct ClusterOutcome {
    std::vector<VertexId> members;
    std::optional<CycleWitness> cycle;  // set in the CycleFound case
    ExploreStats stats;

    bool found_cycle() const { return cycle.has_value(); }
};

/// Spira-style exploration of the cluster of one center.
///
/// Heap entries are edges keyed by d(u, from) + ℓ, ties broken by (edge id,
/// direction). Each finalized vertex x owns a RangeCursor at level a(u) with
/// threshold -d(u, x) and has at most one pending edge in the heap.
class ClusterExplorer {
public:
    ClusterExplorer(const WeightedGraph& g, const Hierarchy& h, const EdgeRangeIndex& index)
        : graph_(g), hierarchy_(h), index_(index) {}

    /// Explores the cluster of center u. Writes d(u, ·) and π(u, ·) for
    /// every finalized vertex into `store`; touches only u's partition.
    ClusterOutcome run(PathStore& store, VertexId u);

    struct QueueItem {
        double key;
        EdgeId edge;
        int direction;  // 0 when from < to
        EdgeRef e;
        friend bool operator>(const QueueItem& a, const QueueItem& b) {
            if (a.key != b.key) return a.key > b.key;
            if (a.edge != b.edge) return a.edge > b.edge;
            return a.direction > b.direction;
        }
    };
    using Queue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

    /// Pulls x's next eligible edge (opening x's cursor
    /// on first use) and pushes it with key d(u, x) + ℓ. The reverse of x's
    /// tree edge π(u, x) is passed over (counted as a degenerate skip), so at
    /// most 2|members| - 1 edges are ever queued. Returns whether an edge was
    /// pushed.
    bool relax_next(VertexId u, VertexId x, const PathStore& store, Queue& queue,
                    ExploreStats& stats);

    void reset_cursors() { cursors_.clear(); }

private:
    const WeightedGraph& graph_;
    const Hierarchy& hierarchy_;
    const EdgeRangeIndex& index_;
    std::unordered_map<VertexId, RangeCursor> cursors_;
};

/// Convenience wrapper around ClusterExplorer::run.
ClusterOutcome cluster_or_cycle(const WeightedGraph& g, const Hierarchy& h,
                                const EdgeRangeIndex& index, PathStore& store, VertexId u);

/// Full cluster vertex set of u (no early stop at cycles), by Dijkstra
/// restricted to edges with d(u, x) + ℓ(x, y) < δ(y, A_{a(u)+1}).
/// Sorted by vertex id. Used for cluster-size statistics.
std::vector<VertexId> full_cluster(const WeightedGraph& g, const Hierarchy& h, VertexId u);

}  // namespace girth
