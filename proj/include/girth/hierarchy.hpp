#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "girth/graph.hpp"

namespace girth {

/// Nested samples A_0 = V ⊇ A_1 ⊇ ... ⊇ A_k = ∅, each stored sorted by id.
struct LevelSets {
    int k = 1;
    std::vector<std::vector<VertexId>> sets;  // size k + 1

    const std::vector<VertexId>& at(int i) const { return sets[static_cast<std::size_t>(i)]; }
};

/// Deterministic 64-bit generator used for all sampling. SplitMix64 seeding
/// into xoshiro256** keeps streams identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::uint64_t s_[4];
};

/// Derives an independent sub-seed for a named phase.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t phase);

/// Largest useful k for n vertices: max(1, ceil(log2 n)).
int max_useful_levels(std::size_t n);

/// Each A_{i+1}, i <= k-2, keeps every member of A_i independently with
/// probability n^(-1/k). k is taken as given; see max_useful_levels for clamping.
LevelSets sample_hierarchy(const WeightedGraph& g, int k, std::uint64_t seed);

/// Per-vertex, per-level distances to the sampled sets, pivots and the last
/// edge on a shortest path from the pivot.
class Hierarchy {
public:
    int k() const { return levels_.k; }
    std::size_t vertex_count() const { return level_of_.size(); }
    const LevelSets& levels() const { return levels_; }

    /// a(u): the largest i with u ∈ A_i.
    int level_of(VertexId u) const { return level_of_[idx(u)]; }
    bool in_level(VertexId u, int i) const { return level_of(u) >= i; }

    /// δ(u, A_i) for 0 <= i <= k; +inf when A_i is empty or unreachable.
    double level_dist(VertexId u, int i) const {
        return i >= k() ? kInfinity : dist_[slot(u, i)];
    }
    /// p_i(u) for 0 <= i < k, or kNoVertex when A_i is unreachable from u.
    VertexId pivot(VertexId u, int i) const { return pivot_[slot(u, i)]; }
    /// Last edge on a shortest path from p_i(u) to u, oriented into u.
    /// from == kNoVertex when u ∈ A_i or u is unreachable.
    const EdgeRef& pivot_parent_edge(VertexId u, int i) const { return parent_[slot(u, i)]; }

    friend Hierarchy compute_level_distances(const WeightedGraph& g, const LevelSets& levels);

private:
    static std::size_t idx(VertexId u) { return static_cast<std::size_t>(u); }
    std::size_t slot(VertexId u, int i) const {
        return idx(u) * static_cast<std::size_t>(k()) + static_cast<std::size_t>(i);
    }

    LevelSets levels_;
    std::vector<int> level_of_;
    std::vector<double> dist_;        // n * k
    std::vector<VertexId> pivot_;     // n * k
    std::vector<EdgeRef> parent_;     // n * k
};

/// One multi-source Dijkstra per level 1..k-1 with every member of A_i at
/// distance 0. Labels are compared as (distance, source id) so the pivot is
/// the smallest-id nearest member.
Hierarchy compute_level_distances(const WeightedGraph& g, const LevelSets& levels);

/// Exact distances and last edges of shortest paths, keyed by (center, target)
/// and partitioned by center. Missing entries read as +inf / no edge.
class PathStore {
public:
    struct Entry {
        double dist = kInfinity;
        EdgeRef parent;  // oriented into the target; from == kNoVertex for none
    };

    PathStore() = default;
    explicit PathStore(std::size_t n) : tables_(n) {}

    std::size_t vertex_count() const { return tables_.size(); }

    double d(VertexId center, VertexId v) const {
        const auto* e = find(center, v);
        return e ? e->dist : kInfinity;
    }
    /// π(center, v); from == kNoVertex when absent or v is the center.
    EdgeRef pi(VertexId center, VertexId v) const {
        const auto* e = find(center, v);
        return e ? e->parent : EdgeRef{};
    }
    bool contains(VertexId center, VertexId v) const { return find(center, v) != nullptr; }

    const Entry* find(VertexId center, VertexId v) const {
        const auto& t = tables_[static_cast<std::size_t>(center)];
        auto it = t.find(v);
        return it == t.end() ? nullptr : &it->second;
    }

    void set(VertexId center, VertexId v, double dist, const EdgeRef& parent) {
        tables_[static_cast<std::size_t>(center)][v] = Entry{dist, parent};
    }

    /// All entries for one center. Writers for distinct centers never share a table.
    const std::unordered_map<VertexId, Entry>& table(VertexId center) const {
        return tables_[static_cast<std::size_t>(center)];
    }

    std::size_t size() const;

private:
    std::vector<std::unordered_map<VertexId, Entry>> tables_;
};

/// d(p_i(u), u) = δ(u, A_i) and π(p_i(u), u) for every u and 0 <= i < k.
PathStore seed_path_store(const Hierarchy& h);

}  // namespace girth
