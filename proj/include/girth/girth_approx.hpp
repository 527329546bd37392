#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girth/cluster_explorer.hpp"
#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"
#include "girth/range_index.hpp"

namespace girth {

/// An explicit simple cycle. `vertices` lists each vertex once; the cycle
/// closes from the last vertex back to the first. edges[j] joins
/// vertices[j] and vertices[(j + 1) % size].
struct MaterializedCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeRef> edges;
    double length = 0.0;
};

struct Diagnostics {
    std::uint64_t queue_insertions = 0;
    std::uint64_t extractions = 0;
    std::uint64_t degenerate_skips = 0;
    std::uint64_t cursor_visits = 0;
    std::uint64_t cluster_members_total = 0;  // Σ_u explored members
    std::uint64_t max_cluster_members = 0;
    std::uint64_t clusters_with_cycle = 0;
    std::uint64_t candidates_scanned = 0;     // edge-scan evaluations
    std::uint64_t edge_scan_improvements = 0;
    std::uint64_t store_entries = 0;
    double cluster_phase_alpha = kInfinity;
    /// α after each improvement, in order. Never increases.
    std::vector<double> alpha_trace;
};

struct ApproxResult {
    double alpha = kInfinity;
    std::optional<CycleWitness> witness;
    std::optional<MaterializedCycle> cycle;
    Diagnostics diagnostics;
    int k = 1;
    int requested_k = 1;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
};

struct ApproxOptions {
    bool materialize = false;
    /// Explore clusters of distinct centers concurrently. Same seed gives
    /// the same result regardless of this flag.
    bool parallel = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Best witness so far. Strict improvement only, so the first of several
/// equal-bound witnesses is kept.
struct BestCycle {
    double alpha = kInfinity;
    std::optional<CycleWitness> witness;

    bool offer(const CycleWitness& w) {
        if (!(w.bound < alpha)) return false;
        alpha = w.bound;
        witness = w;
        return true;
    }
};

/// The (4k/3)-approximation pipeline with its intermediate state exposed.
///
///   GirthApproximator run(graph, 3, seed);
///   auto result = run.run({.materialize = true});
///
/// The graph must outlive the approximator.
class GirthApproximator {
public:
    /// Samples the hierarchy. k larger than max_useful_levels(n) is clamped;
    /// requested_k() keeps the original value.
    GirthApproximator(const WeightedGraph& g, int k, std::uint64_t seed);
    /// Uses the given level sets verbatim.
    GirthApproximator(const WeightedGraph& g, const LevelSets& levels);

    GirthApproximator(const GirthApproximator&) = delete;
    GirthApproximator& operator=(const GirthApproximator&) = delete;

    ApproxResult run(const ApproxOptions& options = {});

    /// Cluster exploration for every vertex; updates `best`.
    void cluster_phase(BestCycle& best, Diagnostics& diag, const ApproxOptions& options);

    const WeightedGraph& graph() const { return graph_; }
    const Hierarchy& hierarchy() const { return hierarchy_; }
    const EdgeRangeIndex& index() const { return index_; }
    const PathStore& store() const { return store_; }
    PathStore& store() { return store_; }
    int k() const { return hierarchy_.k(); }
    int requested_k() const { return requested_k_; }
    bool clamped() const { return requested_k_ != hierarchy_.k(); }

private:
    const WeightedGraph& graph_;
    int requested_k_;
    std::uint64_t seed_ = 0;
    Hierarchy hierarchy_;
    EdgeRangeIndex index_;
    PathStore store_;
};

/// Second loop of the driver: for every edge in both orientations (v, w) and
/// every level i, u = p_i(v) and α' = d(u, v) + ℓ(v, w) + d(u, w) is taken
/// when α' < α, π(u, v) ≠ (w, v) and π(u, w) ≠ (v, w).
void edge_scan_phase(const WeightedGraph& g, const Hierarchy& h, const PathStore& store,
                     BestCycle& best, Diagnostics& diag);

/// One-shot driver. Throws std::invalid_argument for k < 1.
ApproxResult approximate_girth(const WeightedGraph& g, int k, std::uint64_t seed,
                               const ApproxOptions& options = {});

/// Walks π-parents from both witness endpoints, trims the shared prefix at
/// their lowest common ancestor and closes with the witness edge. Throws
/// std::logic_error if the store lacks a parent on either path.
MaterializedCycle materialize_cycle(const PathStore& store, const CycleWitness& witness,
                                    const WeightedGraph& g);

/// Empty string when `c` is a simple closed cycle of existing edges whose
/// recorded lengths sum to c.length; otherwise a description of the defect.
std::string check_cycle(const WeightedGraph& g, const MaterializedCycle& c);

/// Single JSON object: alpha, witness, cycle, k, seed, n, m, diagnostics.
/// Infinite alpha is written as null.
std::string result_to_json(const ApproxResult& r, int indent = -1);

}  // namespace girth
