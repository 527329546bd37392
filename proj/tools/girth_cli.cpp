#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "girth/generators.hpp"
#include "girth/girth_approx.hpp"
#include "girth/graph.hpp"
#include "girth/hierarchy.hpp"
#include "girth/lower_bound.hpp"
#include "girth/oracles.hpp"
#include "girth/verify.hpp"

using namespace girth;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;

// Thrown for bad parameter combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json length_json(double x) { return std::isinf(x) ? json(nullptr) : json(x); }

WeightedGraph load(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_edge_list(buf.str());
    }
    return read_edge_list_file(path);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write " + path);
    out << text;
}

void warn_clamp(int requested, int used, std::size_t n) {
    if (requested != used)
        std::cerr << "warning: k=" << requested << " exceeds ceil(log2 n) for n=" << n
                  << "; using k=" << used << "\n";
}

struct Common {
    std::string input;
    int k = 2;
    std::uint64_t seed = 1;
    bool json = false;
};

int cmd_approx(const Common& c, bool materialize, bool parallel, unsigned threads) {
    const auto g = load(c.input);
    const auto r = approximate_girth(g, c.k, c.seed,
                                     {.materialize = materialize, .parallel = parallel,
                                      .threads = threads});
    warn_clamp(r.requested_k, r.k, g.vertex_count());
    if (c.json) {
        std::cout << result_to_json(r, 2) << "\n";
        return kExitOk;
    }
    std::cout << "alpha " << format_length(r.alpha) << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        std::cout << "witness " << w.center << " " << w.v << " " << w.w << "\n";
    } else {
        std::cout << "witness none\n";
    }
    if (r.cycle) {
        std::cout << "cycle";
        for (auto v : r.cycle->vertices) std::cout << " " << v;
        std::cout << "\ncycle_length " << format_length(r.cycle->length) << "\n";
    }
    std::cout << "k " << r.k << "\nseed " << r.seed << "\n";
    return kExitOk;
}

int cmd_exact(const Common& c) {
    const auto g = load(c.input);
    if (g.vertex_count() > 2000)
        std::cerr << "warning: exact girth is O(m (m + n log n)); n=" << g.vertex_count()
                  << " may take a long time\n";
    const double girth = oracle::exact_girth(g);
    if (c.json)
        std::cout << json{{"girth", length_json(girth)},
                          {"n", g.vertex_count()},
                          {"m", g.edge_count()}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "girth " << format_length(girth) << "\n";
    return kExitOk;
}

int cmd_verify(const Common& c, VerifyConfig cfg, const std::vector<std::string>& corpus) {
    cfg.seed = c.seed;
    std::vector<VerifyCase> cases;
    if (!corpus.empty()) {
        for (const auto& path : corpus) cases.push_back({path, Family::random, load(path)});
    } else {
        cases = make_verify_corpus(cfg);
    }
    const auto rep = run_verify(cases, cfg);

    if (c.json) {
        json j;
        for (const auto& [k, st] : rep.per_k)
            j["per_k"][std::to_string(k)] = {{"runs", st.runs},
                                             {"guarantee_failures", st.guarantee_failures},
                                             {"cycle_failures", st.cycle_failures},
                                             {"max_ratio", st.max_ratio},
                                             {"mean_ratio", st.mean_ratio},
                                             {"bound", 4.0 * k / 3.0}};
        j["cases"] = rep.cases_per_family;
        j["acyclic_cases"] = rep.acyclic_cases;
        j["heavy_regime_cases"] = rep.heavy_cases_in_regime;
        j["light_regime_cases"] = rep.light_cases_in_regime;
        j["violations"] = rep.violations;
        j["cycle_violations"] = rep.cycle_violations;
        j["seconds"] = rep.seconds;
        j["ok"] = rep.ok();
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%-4s %8s %10s %10s %10s %9s %9s\n", "k", "runs", "max_ratio", "mean_ratio",
                    "4k/3", "failures", "bad_cyc");
        for (const auto& [k, st] : rep.per_k)
            std::printf("%-4d %8zu %10.6f %10.6f %10.6f %9zu %9zu\n", k, st.runs, st.max_ratio,
                        st.mean_ratio, 4.0 * k / 3.0, st.guarantee_failures, st.cycle_failures);
        std::cout << "cases:";
        for (const auto& [name, count] : rep.cases_per_family) std::cout << " " << name << "=" << count;
        std::cout << " acyclic=" << rep.acyclic_cases << " M(C)>g/3=" << rep.heavy_cases_in_regime
                  << " M(C)<=g/3=" << rep.light_cases_in_regime << "\n";
        for (const auto& v : rep.violations) std::cout << "VIOLATION " << v << "\n";
        for (const auto& v : rep.cycle_violations) std::cout << "BAD CYCLE " << v << "\n";
        std::printf("%s in %.2fs\n", rep.ok() ? "ok" : "FAILED", rep.seconds);
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_stats(const Common& c, const std::vector<std::size_t>& ns, const std::vector<int>& ks,
              std::size_t seeds, double degree, bool full) {
    std::vector<ClusterStatsRow> rows;
    for (auto n : ns)
        for (int k : ks) {
            rows.push_back(cluster_size_stats(n, k, seeds, degree, c.seed, full));
            warn_clamp(rows.back().requested_k, rows.back().k, n);
        }
    if (c.json) {
        json j = json::array();
        for (const auto& r : rows) {
            json row = {{"n", r.n},           {"k", r.k},         {"requested_k", r.requested_k},
                        {"seeds", r.seeds},   {"mean_explored", r.mean_explored},
                        {"bound", r.bound},   {"ratio", r.ratio()}};
            if (full) {
                row["mean_full"] = r.mean_full;
                row["full_ratio"] = r.full_ratio();
            }
            j.push_back(row);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::printf("%8s %3s %6s %14s %14s %8s", "n", "k", "seeds", "mean_explored", "k*n^(1+1/k)",
                "ratio");
    if (full) std::printf(" %14s %8s", "mean_full", "ratio");
    std::printf("\n");
    for (const auto& r : rows) {
        std::printf("%8zu %3d %6zu %14.1f %14.1f %8.4f", r.n, r.k, r.seeds, r.mean_explored,
                    r.bound, r.ratio());
        if (full) std::printf(" %14.1f %8.4f", r.mean_full, r.full_ratio());
        std::printf("\n");
    }
    return kExitOk;
}

WeightedGraph base_graph(const std::string& name, const std::string& file) {
    if (!file.empty()) return load(file);
    if (name.empty()) throw UsageError("one of --base or --base-file is required");
    try {
        return gen::named(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate and exact girth of weighted undirected graphs"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, bool with_input, bool with_k) {
        if (with_input)
            sub->add_option("-i,--input", common.input, "Edge-list file ('-' for stdin)");
        if (with_k)
            sub->add_option("-k", common.k, "Hierarchy depth")->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "Random seed");
        sub->add_flag("--json", common.json, "Machine-readable output");
    };

    auto* approx = app.add_subcommand("approx", "Approximate the girth");
    add_common(approx, true, true);
    bool materialize = false, parallel = false;
    unsigned threads = 0;
    approx->add_flag("--materialize", materialize, "Print the explicit cycle");
    approx->add_flag("--parallel", parallel, "Explore clusters concurrently");
    approx->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* exact = app.add_subcommand("exact", "Exact girth (small graphs)");
    add_common(exact, true, false);

    auto* verify = app.add_subcommand("verify", "Check the approximation guarantee on random graphs");
    add_common(verify, false, false);
    VerifyConfig vcfg;
    std::vector<std::string> corpus;
    verify->add_option("--trials", vcfg.random_trials, "Random graphs")->check(CLI::PositiveNumber);
    verify->add_option("--adversarial", vcfg.adversarial_trials,
                       "Planted-cycle graphs per regime");
    verify->add_option("--ks", vcfg.ks, "Values of k")->check(CLI::PositiveNumber);
    verify->add_option("--nmin", vcfg.n_min, "Smallest n")->check(CLI::Range(3, 100000));
    verify->add_option("--nmax", vcfg.n_max, "Largest n")->check(CLI::Range(3, 100000));
    verify->add_option("--corpus", corpus, "Edge-list files to use instead of generated graphs");

    auto* stats = app.add_subcommand("stats", "Statistics");
    stats->require_subcommand(1);
    auto* clusters = stats->add_subcommand("clusters", "Explored cluster sizes on G(n, p)");
    add_common(clusters, false, false);
    std::vector<std::size_t> stat_ns{1024};
    std::vector<int> stat_ks{2};
    std::size_t stat_seeds = 5;
    double stat_degree = 8.0;
    bool stat_full = false;
    clusters->add_option("--n", stat_ns, "Vertex counts")->check(CLI::PositiveNumber);
    clusters->add_option("--ks", stat_ks, "Values of k")->check(CLI::PositiveNumber);
    clusters->add_option("-k", stat_ks, "Same as --ks")->check(CLI::PositiveNumber);
    clusters->add_option("--seeds", stat_seeds, "Graphs per row")->check(CLI::PositiveNumber);
    clusters->add_option("--degree", stat_degree, "Expected average degree")
        ->check(CLI::PositiveNumber);
    clusters->add_flag("--full", stat_full, "Also compute untruncated clusters");

    auto* gen_cmd = app.add_subcommand("gen", "Generate graphs");
    gen_cmd->require_subcommand(1);
    std::string out_path;
    std::uint64_t gen_seed = 1;
    std::size_t gen_n = 100, rows = 10, cols = 10;
    double p = 0.05, wmin = 0.0, wmax = 1.0, eps = 0.1;
    std::string name, base_name, base_file;
    auto add_gen_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", out_path, "Output file (default stdout)");
        sub->add_option("--seed", gen_seed, "Random seed");
    };
    auto add_lengths = [&](CLI::App* sub) {
        sub->add_option("--wmin", wmin, "Lengths drawn from (wmin, wmax]")->check(CLI::NonNegativeNumber);
        sub->add_option("--wmax", wmax, "Lengths drawn from (wmin, wmax]")->check(CLI::PositiveNumber);
    };
    auto* gen_gnp = gen_cmd->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
    add_gen_common(gen_gnp);
    add_lengths(gen_gnp);
    gen_gnp->add_option("--n", gen_n, "Vertices");
    gen_gnp->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    auto* gen_grid = gen_cmd->add_subcommand("grid", "rows x cols grid");
    add_gen_common(gen_grid);
    add_lengths(gen_grid);
    gen_grid->add_option("--rows", rows, "Rows")->check(CLI::PositiveNumber);
    gen_grid->add_option("--cols", cols, "Columns")->check(CLI::PositiveNumber);
    auto* gen_named = gen_cmd->add_subcommand("named", "petersen, heawood, k33, triangle, cycleN");
    add_gen_common(gen_named);
    gen_named->add_option("--name", name, "Graph name")->required();
    auto* gen_plant = gen_cmd->add_subcommand("plant", "Short-cycle planting of a unit-length base graph");
    gen_plant->add_option("-o,--output", out_path, "Output graph file; metadata goes to <output>.json")
        ->required();
    gen_plant->add_option("--base", base_name, "Named base graph");
    gen_plant->add_option("--base-file", base_file, "Base graph file");
    gen_plant->add_option("--eps", eps, "Hub edge length, in (0, 1)");

    auto* lbx = app.add_subcommand("lb-experiment", "Edge-access budget experiment on a planting");
    add_common(lbx, false, false);
    std::string strategy = "round-robin";
    std::int64_t budget = -1;
    bool analysis = false;
    lbx->add_option("--base", base_name, "Named base graph");
    lbx->add_option("--base-file", base_file, "Base graph file");
    lbx->add_option("--eps", eps, "Hub edge length, in [0, 1)");
    lbx->add_flag("--analysis-mode", analysis, "Allow eps = 0");
    lbx->add_option("--budget", budget, "Query budget (default: n/2)");
    lbx->add_option("--strategy", strategy, "round-robin, sequential or degree-first")
        ->check(CLI::IsMember({"round-robin", "sequential", "degree-first"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*approx) return cmd_approx(common, materialize, parallel, threads);
        if (*exact) return cmd_exact(common);
        if (*verify) {
            if (vcfg.n_min > vcfg.n_max) throw UsageError("--nmin exceeds --nmax");
            return cmd_verify(common, vcfg, corpus);
        }
        if (*clusters) return cmd_stats(common, stat_ns, stat_ks, stat_seeds, stat_degree, stat_full);
        if (*gen_gnp) {
            emit(serialize_edge_list(gen::gnp(gen_n, p, {wmin, wmax}, gen_seed)), out_path);
            return kExitOk;
        }
        if (*gen_grid) {
            emit(serialize_edge_list(gen::grid(rows, cols, {wmin, wmax}, gen_seed)), out_path);
            return kExitOk;
        }
        if (*gen_named) {
            try {
                emit(serialize_edge_list(gen::named(name)), out_path);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            return kExitOk;
        }
        if (*gen_plant) {
            const auto base = base_graph(base_name, base_file);
            const auto inst = lb::plant(base, eps);
            emit(serialize_edge_list(*inst.graph), out_path);
            emit(lb::planted_sidecar_json(inst) + "\n", out_path + ".json");
            return kExitOk;
        }
        if (*lbx) {
            const auto base = base_graph(base_name, base_file);
            const auto inst = lb::plant(base, eps, {.analysis_mode = analysis});
            const auto b = budget < 0 ? inst.n / 2 : static_cast<std::uint64_t>(budget);
            auto strat = lb::make_strategy(strategy);
            const auto rep = lb::run_access_experiment(inst, b, *strat);
            if (common.json) {
                std::cout << json{{"n", inst.n},
                                  {"m", inst.edges.size()},
                                  {"strategy", strategy},
                                  {"budget", rep.budget},
                                  {"queries_used", rep.queries_used},
                                  {"edges_revealed", rep.edges_revealed},
                                  {"plantable_revealed", rep.plantable_revealed},
                                  {"plantable_total", rep.plantable_total},
                                  {"fraction_plantable_unseen", rep.fraction_plantable_unseen}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "n " << inst.n << "\nm " << inst.edges.size() << "\nstrategy "
                          << strategy << "\nbudget " << rep.budget << "\nqueries_used "
                          << rep.queries_used << "\nedges_revealed " << rep.edges_revealed
                          << "\nplantable_revealed " << rep.plantable_revealed << " of "
                          << rep.plantable_total << "\nfraction_plantable_unseen "
                          << format_length(rep.fraction_plantable_unseen) << "\n";
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "error: ";
        if (e.line()) std::cerr << "line " << e.line() << ": ";
        std::cerr << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        // bad generator or planting parameters
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
