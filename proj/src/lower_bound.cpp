#include "girth/lower_bound.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "girth/oracles.hpp"

namespace girth::lb {

PlantedInstance plant(const WeightedGraph& base, double epsilon, const PlantOptions& opts) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1)");
    if (epsilon == 0.0 && !opts.analysis_mode)
        throw std::invalid_argument(
            "epsilon = 0 gives zero-length edges; only allowed in analysis mode");
    for (const auto& e : base.edges())
        if (e.length != 1.0) throw std::invalid_argument("base graph must have unit lengths");
    const double g0 = oracle::exact_girth(base);
    if (g0 == kInfinity) throw std::invalid_argument("base graph has no cycle");

    const std::size_t n0 = base.vertex_count();
    const std::size_t m0 = base.edge_count();
    PlantedInstance inst;
    inst.epsilon = epsilon;
    inst.g0 = g0;
    inst.base_n = n0;
    inst.base_m = m0;
    inst.replicas.resize(n0);
    inst.hub.resize(n0);

    // n_v = ceil(2 deg / d_avg) = ceil(deg * n0 / m0).
    VertexId next = 0;
    for (std::size_t v = 0; v < n0; ++v) {
        const std::size_t deg = base.degree(static_cast<VertexId>(v));
        const std::size_t nv = (deg * n0 + m0 - 1) / m0;
        for (std::size_t j = 0; j < nv; ++j) inst.replicas[v].push_back(next++);
        inst.hub[v] = next++;
    }
    inst.n = static_cast<std::size_t>(next);

    // The i-th incident edge of v (1-based, adjacency order) attaches to
    // replica (i mod n_v) + 1.
    std::vector<std::array<VertexId, 2>> endpoint(m0);
    for (std::size_t v = 0; v < n0; ++v) {
        const auto adj = base.neighbors(static_cast<VertexId>(v));
        const auto& reps = inst.replicas[v];
        for (std::size_t i = 1; i <= adj.size(); ++i) {
            const auto& a = adj[i - 1];
            const auto& e = base.edge(a.edge);
            const int side = e.from == static_cast<VertexId>(v) ? 0 : 1;
            endpoint[static_cast<std::size_t>(a.edge)][static_cast<std::size_t>(side)] =
                reps[i % reps.size()];
        }
    }
    for (std::size_t id = 0; id < m0; ++id)
        inst.edges.push_back({endpoint[id][0], endpoint[id][1], 1.0});

    for (std::size_t v = 0; v < n0; ++v) {
        const auto& reps = inst.replicas[v];
        for (VertexId r : reps) inst.edges.push_back({inst.hub[v], r, epsilon});
        for (std::size_t j = 0; j + 1 < reps.size(); ++j) {
            inst.plantable.push_back(static_cast<EdgeId>(inst.edges.size()));
            inst.edges.push_back({reps[j], reps[j + 1], g0});
        }
        if (reps.size() > 1) inst.S.insert(inst.S.end(), reps.begin(), reps.end());
    }
    std::sort(inst.S.begin(), inst.S.end());
    if (epsilon > 0.0) inst.graph = build_graph(inst.n, inst.edges);
    return inst;
}

WeightedGraph replant_edge(const PlantedInstance& inst, EdgeId edge, double new_length) {
    if (!std::binary_search(inst.plantable.begin(), inst.plantable.end(), edge))
        throw std::invalid_argument("edge " + std::to_string(edge) + " is not plantable");
    if (!(new_length >= 1.0)) throw std::invalid_argument("replanted length must be at least 1");
    auto edges = inst.edges;
    edges[static_cast<std::size_t>(edge)].length = new_length;
    return build_graph(inst.n, edges);
}

PlantingReport verify_planting(const PlantedInstance& inst, double tolerance,
                               std::size_t max_replants) {
    PlantingReport rep;
    const double n0 = static_cast<double>(inst.base_n);
    auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

    const double n = static_cast<double>(inst.n);
    rep.size_bounds = n >= 3 * n0 && n <= 4 * n0 && static_cast<double>(inst.S.size()) >= n0;
    if (!rep.size_bounds) fail("size bounds: n or |S| outside the guaranteed range");

    std::size_t replica_sum = 0;
    for (const auto& r : inst.replicas) replica_sum += r.size();
    rep.replica_sum = replica_sum >= 2 * inst.base_n && replica_sum <= 3 * inst.base_n;
    if (!rep.replica_sum) fail("replica count sum outside [2 n0, 3 n0]");

    rep.length_range = std::all_of(inst.edges.begin(), inst.edges.end(), [&](const EdgeInput& e) {
        return e.length >= inst.epsilon && e.length <= inst.g0;
    });
    if (!rep.length_range) fail("edge length outside [epsilon, g0]");

    std::vector<char> in_s(inst.n, 0);
    for (VertexId s : inst.S) in_s[static_cast<std::size_t>(s)] = 1;

    std::vector<std::size_t> eps_count(inst.n, 0), g_count(inst.n, 0), unit_count(inst.n, 0);
    for (const auto& e : inst.edges) {
        for (VertexId x : {e.u, e.v}) {
            const auto xi = static_cast<std::size_t>(x);
            if (e.length == inst.epsilon) ++eps_count[xi];
            else if (e.length == inst.g0) ++g_count[xi];
            else if (e.length == 1.0) ++unit_count[xi];
        }
    }
    const std::size_t lo = inst.base_m / (2 * inst.base_n);
    const std::size_t hi = (inst.base_m + inst.base_n - 1) / inst.base_n;
    rep.s_vertex_degrees = true;
    for (VertexId s : inst.S) {
        const auto si = static_cast<std::size_t>(s);
        if (eps_count[si] != 1 || g_count[si] < 1 || g_count[si] > 2 || unit_count[si] < lo ||
            unit_count[si] > hi) {
            rep.s_vertex_degrees = false;
            fail("S-vertex " + std::to_string(s) + " has an unexpected edge-length profile");
            break;
        }
    }

    rep.plantable_in_S = std::all_of(inst.plantable.begin(), inst.plantable.end(), [&](EdgeId id) {
        const auto& e = inst.edges[static_cast<std::size_t>(id)];
        return in_s[static_cast<std::size_t>(e.u)] && in_s[static_cast<std::size_t>(e.v)];
    });
    if (!rep.plantable_in_S) fail("plantable edge with an endpoint outside S");

    if (!inst.graph) {
        fail("no weighted graph (analysis mode); girth checks skipped");
        return rep;
    }
    rep.girth = oracle::exact_girth(*inst.graph);
    rep.girth_at_least_g0 = rep.girth >= inst.g0;
    if (!rep.girth_at_least_g0) fail("girth below g0");

    const double target = 1.0 + 2.0 * inst.epsilon;
    rep.replant_creates_short_cycle = !inst.plantable.empty();
    std::size_t done = 0;
    for (EdgeId id : inst.plantable) {
        if (max_replants && done++ >= max_replants) break;
        const double g = oracle::exact_girth(replant_edge(inst, id, 1.0));
        if (std::abs(g - target) > tolerance) {
            rep.replant_creates_short_cycle = false;
            fail("replanting edge " + std::to_string(id) + " gives girth " + format_length(g));
            break;
        }
    }
    if (inst.plantable.empty()) fail("no plantable edges");
    return rep;
}

AccessOracle::AccessOracle(std::size_t n, const std::vector<EdgeInput>& edges)
    : adjacency_(n), counter_(n, 1), revealed_(edges.size(), 0) {
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const auto& e = edges[id];
        const auto eid = static_cast<EdgeId>(id);
        adjacency_.at(static_cast<std::size_t>(e.u)).push_back({e.u, e.v, e.length, eid});
        adjacency_.at(static_cast<std::size_t>(e.v)).push_back({e.v, e.u, e.length, eid});
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end(), [](const EdgeRef& a, const EdgeRef& b) {
            return a.length != b.length ? a.length < b.length : a.to < b.to;
        });
}

void AccessOracle::check(std::size_t j) const {
    if (j >= adjacency_.size())
        throw std::out_of_range("vertex index " + std::to_string(j) + " out of range");
}

std::size_t AccessOracle::degree(std::size_t j) {
    check(j);
    ++queries_;
    return adjacency_[j].size();
}

std::optional<EdgeRef> AccessOracle::next_edge(std::size_t j) {
    check(j);
    auto& c = counter_[j];
    if (c > adjacency_[j].size()) return std::nullopt;
    const EdgeRef e = adjacency_[j][c - 1];
    ++c;
    ++queries_;
    auto& seen = revealed_[static_cast<std::size_t>(e.id)];
    if (!seen) {
        seen = 1;
        ++revealed_count_;
    }
    return e;
}

namespace {

class RoundRobin final : public AccessStrategy {
public:
    bool step(AccessOracle& oracle) override {
        if (!init_) {
            active_.resize(oracle.vertex_count());
            std::iota(active_.begin(), active_.end(), std::size_t{0});
            init_ = true;
        }
        while (!active_.empty()) {
            if (pos_ >= active_.size()) pos_ = 0;
            if (oracle.next_edge(active_[pos_])) {
                ++pos_;
                return true;
            }
            active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(pos_));
        }
        return false;
    }

private:
    bool init_ = false;
    std::vector<std::size_t> active_;
    std::size_t pos_ = 0;
};

class Sequential final : public AccessStrategy {
public:
    bool step(AccessOracle& oracle) override {
        for (; v_ < oracle.vertex_count(); ++v_)
            if (oracle.next_edge(v_)) return true;
        return false;
    }

private:
    std::size_t v_ = 0;
};

class DegreeFirst final : public AccessStrategy {
public:
    bool step(AccessOracle& oracle) override {
        const std::size_t n = oracle.vertex_count();
        if (degrees_.size() < n) {
            degrees_.push_back(oracle.degree(degrees_.size()));
            if (degrees_.size() == n) {
                order_.resize(n);
                std::iota(order_.begin(), order_.end(), std::size_t{0});
                std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
                    return degrees_[a] > degrees_[b];
                });
            }
            return true;
        }
        for (; pos_ < order_.size(); ++pos_)
            if (oracle.next_edge(order_[pos_])) return true;
        return false;
    }

private:
    std::vector<std::size_t> degrees_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<AccessStrategy> make_round_robin() { return std::make_unique<RoundRobin>(); }
std::unique_ptr<AccessStrategy> make_sequential() { return std::make_unique<Sequential>(); }
std::unique_ptr<AccessStrategy> make_degree_first() { return std::make_unique<DegreeFirst>(); }

std::unique_ptr<AccessStrategy> make_strategy(const std::string& name) {
    if (name == "round-robin") return make_round_robin();
    if (name == "sequential") return make_sequential();
    if (name == "degree-first") return make_degree_first();
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

AccessReport run_access_experiment(const PlantedInstance& inst, std::uint64_t budget,
                                   AccessStrategy& strategy) {
    AccessOracle oracle(inst);
    while (oracle.queries() < budget && strategy.step(oracle)) {
    }
    AccessReport rep;
    rep.queries_used = oracle.queries();
    rep.budget = budget;
    rep.edges_revealed = oracle.revealed_count();
    rep.edges_total = inst.edges.size();
    rep.plantable_total = inst.plantable.size();
    for (EdgeId id : inst.plantable)
        if (oracle.revealed(id)) ++rep.plantable_revealed;
    rep.fraction_plantable_unseen =
        rep.plantable_total == 0
            ? 0.0
            : static_cast<double>(rep.plantable_total - rep.plantable_revealed) /
                  static_cast<double>(rep.plantable_total);
    return rep;
}

std::string planted_sidecar_json(const PlantedInstance& inst) {
    nlohmann::json j;
    j["S"] = inst.S;
    j["epsilon"] = inst.epsilon;
    j["g0"] = inst.g0;
    j["plantable"] = inst.plantable;
    j["n0"] = inst.base_n;
    j["m0"] = inst.base_m;
    j["hubs"] = inst.hub;
    return j.dump(2);
}

}  // namespace girth::lb
