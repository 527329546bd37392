#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "girth/graph.hpp"

namespace girth::lb {

/// Weighted short-cycle planting of an unweighted base graph.
///
/// Base vertex v becomes replicas v_1..v_{n_v}, n_v = ceil(2 deg(v) / d_avg),
/// plus a hub s_v joined to each replica by an ε-edge. Consecutive replicas
/// are joined by edges of length g0 (the base girth); base edges keep length 1
/// and are spread round-robin over the replicas.
struct PlantedInstance {
    std::size_t n = 0;
    std::vector<EdgeInput> edges;        // edge ids are positions in this list
    std::optional<WeightedGraph> graph;  // absent in analysis mode (ε = 0)
    double epsilon = 0.0;
    double g0 = 0.0;
    std::size_t base_n = 0;
    std::size_t base_m = 0;
    std::vector<VertexId> S;                       // sorted
    std::vector<std::vector<VertexId>> replicas;   // per base vertex
    std::vector<VertexId> hub;                     // per base vertex
    std::vector<EdgeId> plantable;                 // the length-g0 edges
};

struct PlantOptions {
    /// Permit ε = 0. The instance then has no WeightedGraph and is only
    /// usable with the access oracle.
    bool analysis_mode = false;
};

/// Throws std::invalid_argument for non-unit base lengths, an acyclic base,
/// ε outside [0, 1), or ε = 0 outside analysis mode.
PlantedInstance plant(const WeightedGraph& base, double epsilon, const PlantOptions& opts = {});

/// Copy of the instance graph with one plantable edge's length replaced.
/// Throws std::invalid_argument for a non-plantable edge or new_length < 1.
WeightedGraph replant_edge(const PlantedInstance& inst, EdgeId edge, double new_length);

/// Outcome of checking every planting property on an instance.
struct PlantingReport {
    bool size_bounds = false;     // n ∈ [3 n0, 4 n0], |S| >= n0
    bool replica_sum = false;     // Σ n_v ∈ [2 n0, 3 n0]
    bool length_range = false;    // every ℓ ∈ [ε, g0]
    bool girth_at_least_g0 = false;
    bool s_vertex_degrees = false;
    bool plantable_in_S = false;
    bool replant_creates_short_cycle = false;  // each replant to 1 gives girth 1 + 2ε
    double girth = kInfinity;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Exact-girth based checks; `tolerance` applies to the 1 + 2ε comparison.
/// `max_replants` limits how many plantable edges are replanted (0 = all).
PlantingReport verify_planting(const PlantedInstance& inst, double tolerance = 1e-9,
                               std::size_t max_replants = 0);

/// Sequential edge-access oracle. Each vertex reveals its incident edges in
/// non-decreasing length order (ties by neighbor id), one per query.
class AccessOracle {
public:
    AccessOracle(std::size_t n, const std::vector<EdgeInput>& edges);
    explicit AccessOracle(const PlantedInstance& inst) : AccessOracle(inst.n, inst.edges) {}

    std::size_t vertex_count() const { return adjacency_.size(); }

    /// Degree of vertex j. Counts as one query.
    std::size_t degree(std::size_t j);

    /// The c(j)-th edge of vertex j, then c(j) += 1. Counts as one query.
    /// Returns nullopt without counting once the vertex is exhausted.
    std::optional<EdgeRef> next_edge(std::size_t j);

    /// 1-based counter c(j).
    std::size_t counter(std::size_t j) const { return counter_.at(j); }
    std::uint64_t queries() const { return queries_; }
    bool revealed(EdgeId e) const { return revealed_[static_cast<std::size_t>(e)]; }
    std::size_t revealed_count() const { return revealed_count_; }

private:
    void check(std::size_t j) const;

    std::vector<std::vector<EdgeRef>> adjacency_;
    std::vector<std::size_t> counter_;
    std::vector<char> revealed_;
    std::size_t revealed_count_ = 0;
    std::uint64_t queries_ = 0;
};

/// A deterministic query strategy. step() issues at most one counted query
/// and returns false once it has nothing more to ask.
class AccessStrategy {
public:
    virtual ~AccessStrategy() = default;
    virtual bool step(AccessOracle& oracle) = 0;
};

/// One next-edge query per vertex in turn, skipping exhausted vertices.
std::unique_ptr<AccessStrategy> make_round_robin();
/// Drains vertex 0, then vertex 1, and so on.
std::unique_ptr<AccessStrategy> make_sequential();
/// Queries the degree of every vertex first, then drains from the highest degree down.
std::unique_ptr<AccessStrategy> make_degree_first();
/// Creates a strategy by name: round-robin, sequential, degree-first.
std::unique_ptr<AccessStrategy> make_strategy(const std::string& name);

struct AccessReport {
    std::uint64_t queries_used = 0;
    std::uint64_t budget = 0;
    std::size_t edges_revealed = 0;
    std::size_t edges_total = 0;
    std::size_t plantable_revealed = 0;
    std::size_t plantable_total = 0;
    double fraction_plantable_unseen = 0.0;
};

AccessReport run_access_experiment(const PlantedInstance& inst, std::uint64_t budget,
                                   AccessStrategy& strategy);

/// Sidecar metadata: {S, epsilon, g0, plantable, n0, m0}.
std::string planted_sidecar_json(const PlantedInstance& inst);

}  // namespace girth::lb
