#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"

namespace girth {

/// For every vertex v and level 0 <= i < k, a complete binary tree over v's
/// incident edges in adjacency order. Leaf j carries the shifted length
///   y = ℓ(v, w_j) - δ(w_j, A_{i+1}),
/// internal nodes carry the subtree minimum, padding leaves carry +inf.
/// At level k-1 every y is -inf.
///
/// Trees are stored heap-ordered (root at 1, children 2t and 2t+1) in one
/// flat array per level; vertex v's tree begins at tree_offset(v).
class EdgeRangeIndex {
public:
    EdgeRangeIndex() = default;

    int k() const { return k_; }
    const WeightedGraph& graph() const { return *graph_; }

    /// Number of leaves (power of two, at least 1) in v's tree.
    std::size_t leaf_count(VertexId v) const { return leaves_[static_cast<std::size_t>(v)]; }

    /// Heap node t (1-based) of v's tree at level i.
    double node(VertexId v, int i, std::size_t t) const {
        return values_[static_cast<std::size_t>(i)][offset_[static_cast<std::size_t>(v)] + t];
    }
    double root_min(VertexId v, int i) const { return node(v, i, 1); }
    /// y annotation of v's j-th incident edge at level i.
    double shifted_length(VertexId v, int i, std::size_t j) const {
        return node(v, i, leaf_count(v) + j);
    }

    friend EdgeRangeIndex build_index(const WeightedGraph& g, int k,
                                      const std::function<double(VertexId, int)>& next_level_dist);

private:
    const WeightedGraph* graph_ = nullptr;
    int k_ = 0;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> leaves_;
    std::vector<std::vector<double>> values_;  // per level, 2 * leaves per vertex
};

/// The graph and hierarchy must outlive the index.
EdgeRangeIndex build_index(const WeightedGraph& g, const Hierarchy& h);

/// Same, with δ(w, A_{i+1}) supplied as next_level_dist(w, i). Lets tests pin
/// arbitrary annotations; the graph must outlive the index.
EdgeRangeIndex build_index(const WeightedGraph& g, int k,
                           const std::function<double(VertexId, int)>& next_level_dist);

/// Enumerates v's incident edges with y < y0 at one level, in adjacency
/// order, O(log deg) tree nodes per produced edge.
class RangeCursor {
public:
    RangeCursor() = default;
    RangeCursor(const EdgeRangeIndex& index, VertexId v, int level, double y0);

    /// Next eligible edge oriented away from v, or nullopt when exhausted.
    std::optional<EdgeRef> next();

    bool exhausted() const { return done_; }
    VertexId vertex() const { return v_; }
    int level() const { return level_; }
    double threshold() const { return y0_; }
    /// Tree nodes inspected so far (instrumentation).
    std::uint64_t visits() const { return visits_; }

private:
    const EdgeRangeIndex* index_ = nullptr;
    VertexId v_ = kNoVertex;
    int level_ = 0;
    double y0_ = 0.0;
    std::size_t pos_ = 0;  // next leaf to consider
    bool done_ = true;
    std::uint64_t visits_ = 0;
};

/// Throws std::out_of_range for a level outside [0, k).
RangeCursor open_cursor(const EdgeRangeIndex& index, VertexId v, int level, double y0);

}  // namespace girth
