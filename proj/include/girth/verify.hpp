#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "girth/graph.hpp"

namespace girth {

/// Families of generated test graphs.
enum class Family { random, light_cycle, heavy_edge };
std::string family_name(Family f);

struct VerifyConfig {
    std::size_t random_trials = 200;
    std::size_t adversarial_trials = 20;  // per adversarial family
    std::vector<int> ks{1, 2, 3};
    std::uint64_t seed = 1;
    std::size_t n_min = 20;
    std::size_t n_max = 150;
    double relative_slack = 1e-9;
    bool materialize = true;
};

struct VerifyCase {
    std::string name;
    Family family = Family::random;
    WeightedGraph graph;
};

struct KStats {
    std::size_t runs = 0;
    std::size_t guarantee_failures = 0;
    std::size_t cycle_failures = 0;
    double max_ratio = 0.0;   // alpha / g
    double mean_ratio = 0.0;
};

struct VerifyReport {
    std::map<int, KStats> per_k;
    std::map<std::string, std::size_t> cases_per_family;
    std::size_t acyclic_cases = 0;
    std::vector<std::string> violations;  // guarantee breaches
    std::vector<std::string> cycle_violations;  // invalid or over-long materialized cycles
    std::size_t heavy_cases_in_regime = 0;  // cases whose shortest cycle has M(C) > g/3
    std::size_t light_cases_in_regime = 0;  // and M(C) <= g/3
    double seconds = 0.0;

    bool ok() const { return violations.empty() && cycle_violations.empty(); }
};

/// Builds the trial corpus: random connected graphs with lengths in (0, 1]
/// and both planted-cycle families.
std::vector<VerifyCase> make_verify_corpus(const VerifyConfig& cfg);

/// For every case and k: exact girth g, approximation alpha, then
/// g <= alpha <= (4k/3) g up to relative slack, and materialized cycle
/// validity with length <= alpha.
VerifyReport run_verify(const std::vector<VerifyCase>& cases, const VerifyConfig& cfg);

struct ClusterStatsRow {
    std::size_t n = 0;
    int k = 0;
    int requested_k = 0;
    std::size_t seeds = 0;
    double mean_explored = 0.0;  // mean over seeds of Σ_u explored members
    double mean_full = 0.0;      // mean over seeds of Σ_u |CL_V(u)|, when requested
    double bound = 0.0;          // k n^{1+1/k}
    double ratio() const { return mean_explored / bound; }
    double full_ratio() const { return mean_full / bound; }
};

/// Random G(n, p) graphs with expected average degree `avg_degree` and
/// lengths in (0, 1].
ClusterStatsRow cluster_size_stats(std::size_t n, int k, std::size_t seeds, double avg_degree,
                                   std::uint64_t seed, bool full);

}  // namespace girth
