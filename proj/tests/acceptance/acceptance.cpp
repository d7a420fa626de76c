// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run only criterion N

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "euler_orient/errors.hpp"
#include "euler_orient/estimator.hpp"
#include "euler_orient/exact_count.hpp"
#include "euler_orient/generators.hpp"
#include "euler_orient/lemma_lab.hpp"
#include "euler_orient/montecarlo.hpp"
#include "euler_orient/rng.hpp"
#include "euler_orient/spectral.hpp"
#include "euler_orient_cli/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace eo;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

std::string fmt(double x, int precision = 4) {
    std::ostringstream out;
    out.precision(precision);
    out << x;
    return out.str();
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Random even graphs with m <= max_edges, optionally connected with lambda2/n >= gamma_min.
std::vector<Graph> random_graphs(int count, int max_edges, double gamma_min, std::uint64_t seed) {
    std::vector<Graph> graphs;
    Rng pick(seed);
    while (static_cast<int>(graphs.size()) < count) {
        const int n = 5 + static_cast<int>(uniform_index(pick, 5));
        const int toggles = static_cast<int>(uniform_index(pick, 3 * static_cast<std::uint64_t>(n)));
        Graph g = random_even_graph(n, toggles, pick());
        if (g.edge_count() > max_edges) continue;
        if (gamma_min > 0 && (!is_connected(g) || algebraic_connectivity(g) / n < gamma_min)) continue;
        if (std::find(graphs.begin(), graphs.end(), g) != graphs.end()) continue;
        graphs.push_back(std::move(g));
    }
    return graphs;
}

Outcome criterion_exact_counts() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<std::pair<std::string, Graph>> named{
        {"K3", complete(3)},
        {"K5", complete(5)},
        {"K7", complete(7)},
        {"K2,2", complete_bipartite(2, 2)},
        {"K4,4", complete_bipartite(4, 4)},
    };
    for (int n = 3; n <= 10; ++n) named.emplace_back("C" + std::to_string(n), cycle(n));
    int disagreements = 0;
    for (const auto& [name, g] : named) {
        const BigCount bt = eo_count_backtrack(g);
        const BigCount dp = eo_count_dp(g);
        if (bt != dp) {
            ++disagreements;
            o.check(false, name + ": backtrack " + to_string(bt) + " != dp " + to_string(dp));
        }
    }
    const auto randoms = random_graphs(200, 24, 0.0, 2024);
    for (std::size_t i = 0; i < randoms.size(); ++i) {
        if (eo_count_backtrack(randoms[i]) != eo_count_dp(randoms[i])) {
            ++disagreements;
            o.check(false, "random graph #" + std::to_string(i) + " disagrees");
        }
    }
    o.check(disagreements == 0, std::to_string(named.size()) + " named + 200 random graphs (m <= 24): " +
                                    std::to_string(disagreements) + " disagreements");

    const mpz_class k5 = testing::brute_force_eo(complete(5));
    const mpz_class k7 = testing::brute_force_eo(complete(7));
    o.check(k5 == 24 && eo_count_dp(complete(5)) == k5 && eo_count_backtrack(complete(5)) == k5,
            "EO(K5) = 24 from enumeration, backtracking and DP");
    o.check(k7 == 2640 && eo_count_dp(complete(7)) == k7 && eo_count_backtrack(complete(7)) == k7,
            "EO(K7) = 2640 from enumeration, backtracking and DP");
    const double elapsed = seconds_since(start);
    o.check(elapsed < 300.0, "runtime " + fmt(elapsed, 3) + " s < 300 s");
    return o;
}

Outcome criterion_matrix_tree() {
    Outcome o;
    const Corpus corpus = builtin_corpus(1, 100);
    int mismatches = 0;
    for (const auto& entry : corpus) {
        const long n = entry.graph.vertex_count();
        if (spanning_tree_count(entry.graph) * n * n != det_qhat_exact(entry.graph)) {
            ++mismatches;
            o.check(false, entry.id + ": t n^2 != det Qhat");
        }
    }
    o.check(mismatches == 0, "t(G) n^2 = det Qhat(G) on " + std::to_string(corpus.size()) + " corpus graphs");
    o.check(spanning_tree_count(complete(5)) == 125, "t(K5) = 125");

    std::vector<Graph> small;
    for (const auto& entry : corpus) {
        if (entry.graph.edge_count() <= 12) small.push_back(entry.graph);
    }
    for (const Graph& g : random_graphs(40, 12, 0.0, 77)) small.push_back(g);
    small.push_back(path(6));
    small.push_back(complete_bipartite(2, 5));
    small.push_back(complete(4));
    int dc_mismatches = 0;
    for (const Graph& g : small) {
        if (spanning_tree_count(g) != testing::deletion_contraction_trees(g)) ++dc_mismatches;
    }
    o.check(dc_mismatches == 0, "deletion-contraction agrees on " + std::to_string(small.size()) +
                                    " graphs with m <= 12 (" + std::to_string(dc_mismatches) + " mismatches)");
    return o;
}

Outcome criterion_theta() {
    Outcome o;
    std::vector<std::pair<std::string, Graph>> graphs{
        {"K5", complete(5)},
        {"K7", complete(7)},
        {"K4,4", complete_bipartite(4, 4)},
        {"circulant(9,{1,2})", circulant(9, std::array{1, 2})},
    };
    const auto randoms = random_graphs(20, 24, 0.3, 31);
    for (std::size_t i = 0; i < randoms.size(); ++i) graphs.emplace_back("random #" + std::to_string(i), randoms[i]);
    for (const auto& [name, g] : graphs) {
        const double r = ratio(eo_count_dp(g), theta_estimate(g));
        o.check(r >= 0.5 && r <= 1.6, name + ": EO / estimate = " + fmt(r) + " (gamma " +
                                          fmt(algebraic_connectivity(g) / g.vertex_count(), 3) + ")");
    }
    return o;
}

Outcome criterion_mckay() {
    Outcome o;
    const auto start = Clock::now();
    for (int n : {5, 7}) {
        const double r = ratio(eo_count_dp(complete(n)), mckay_kn(n));
        o.check(std::abs(r - 1.0) <= 0.15, "K" + std::to_string(n) + ": EO / asymptotic = " + fmt(r));
    }
    const double elapsed = seconds_since(start);
    o.check(elapsed < 10.0, "runtime " + fmt(elapsed, 3) + " s");
    return o;
}

Outcome criterion_regular_bounds() {
    Outcome o;
    Corpus graphs = builtin_corpus(1, 100);
    graphs.push_back({"circulant:11:1,3", circulant(11, std::array{1, 3})});
    graphs.push_back({"circulant:12:1,4", circulant(12, std::array{1, 4})});
    int tested = 0;
    for (const auto& entry : graphs) {
        const auto d = half_regular_degree(entry.graph);
        if (!d || entry.graph.edge_count() > kDefaultEdgeCap) continue;
        BigCount exact;
        try {
            exact = eo_count_dp(entry.graph);
        } catch (const ResourceCapError&) {
            continue;
        }
        ++tested;
        const RegularBounds b = regular_bounds(entry.graph.vertex_count(), *d);
        const bool ok = b.lower.compare(exact, 1e-9) <= 0 && b.upper.compare(exact, 1e-9) >= 0;
        o.check(ok, entry.id + " (d=" + std::to_string(*d) + "): " + b.lower.approx_string() + " <= " +
                        to_string(exact) + " <= " + b.upper.approx_string());
    }
    o.check(tested >= 10, std::to_string(tested) + " 2d-regular graphs with exact counts");
    return o;
}

Outcome criterion_monte_carlo() {
    Outcome o;
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K3", complete(3)}, {"C4", cycle(4)}}) {
        const McResult r = mc_S_uniform(g, {1'000'000, 1, 1});
        const double est = r.estimate.value();
        const double z = std::abs(est - 2.0) / (r.stderr_rel * est);
        o.check(z <= 3.0, "uniform_S " + name + ": " + fmt(est, 6) + " vs 2, " + fmt(z, 3) + " stderr");
    }
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K5", complete(5)}, {"K7", complete(7)}}) {
        const auto start = Clock::now();
        const double exact = eo_count_dp(g).get_d();
        const McResult r = mc_Int_gaussian(g, {100'000, 1, 1}, 0.1);
        const double elapsed = seconds_since(start);
        const double rel = r.estimate.value() / exact - 1.0;
        o.check(std::abs(rel) <= 0.10, "gaussian_Int " + name + " eps=0.1: " + fmt(r.estimate.value(), 6) + " vs " +
                                           fmt(exact, 6) + " (relative error " + fmt(rel, 3) + ")");
        o.check(elapsed < 60.0, "gaussian_Int " + name + " runtime " + fmt(elapsed, 3) + " s");
    }
    // Weights are identically 1 for a correct sampler, so the standard error is
    // zero up to round-off; 1e-10 absorbs the latter.
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"K4", complete(4)}, {"K5", complete(5)}}) {
        const NormCheck c = gaussian_norm_check(g, 0.5, {100'000, 1, 1});
        o.check(std::abs(c.ratio - 1.0) <= 3 * c.result.stderr_rel + 1e-10,
                "gaussian_norm " + name + ": ratio " + fmt(c.ratio, 15));
    }
    const NormCheck boxed = gaussian_norm_check(complete(4), 0.5, {100'000, 1, 1}, 10.0);
    o.check(std::abs(boxed.ratio - 1.0) <= 3 * boxed.result.stderr_rel + 1e-10,
            "gaussian_norm K4 inside U_n(10): ratio " + fmt(boxed.ratio, 15));
    return o;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome criterion_lemma_suites() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "euler_orient_acceptance_verify";
    const CliRun run = cli_run({"verify", "--suite", "all", "--counterexample-dir", dir.string()});
    o.check(run.code == cli::kExitOk, "verify --suite all exit code " + std::to_string(run.code));
    if (run.out.empty()) {
        o.check(false, "no report: " + run.err);
        return o;
    }
    const auto doc = nlohmann::json::parse(run.out);
    for (const auto& report : doc["reports"]) {
        std::string observed;
        for (const auto& [key, value] : report["observed"].items()) {
            if (value.is_number()) observed += " " + key + "=" + fmt(value.get<double>());
        }
        o.check(report["violations"] == 0, report["lemma"].get<std::string>() + ": " + report["instances"].dump() +
                                               " instances, " + report["violations"].dump() + " violations, " +
                                               report["skipped"].dump() + " skipped;" + observed);
    }
    std::filesystem::remove_all(dir);
    return o;
}

Outcome criterion_determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands{
        {"mc", "--in", "complete:7", "--method", "gaussian_Int", "--samples", "100000", "--seed", "3"},
        {"mc", "--in", "complete:5", "--method", "uniform_S", "--samples", "100000", "--seed", "3"},
        {"mc", "--in", "complete:5", "--method", "gaussian_norm", "--samples", "50000", "--seed", "3"},
        {"count", "--in", "complete:7"},
        {"estimate", "--in", "complete:7", "--methods", "theta,mckay_kn,bounds"},
        {"gen", "random:9:40:0.3", "--seed", "7"},
        {"verify", "--suite", "all", "--seed", "5", "--corpus-size", "40"},
    };
    for (const auto& base : commands) {
        std::string label;
        for (const auto& a : base) label += a + " ";
        const CliRun first = cli_run(base);
        const CliRun second = cli_run(base);
        auto with = [&](const char* threads) {
            auto args = base;
            if (base.front() != "gen") args.insert(args.end(), {"--threads", threads});
            return cli_run(args);
        };
        const CliRun one = with("1");
        const CliRun four = with("4");
        const bool ok = first.code == 0 && !first.out.empty() && first.out == second.out && first.out == one.out &&
                        first.out == four.out;
        o.check(ok, label + "(repeat, --threads 1, --threads 4)");
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "exact-count oracle agreement", criterion_exact_counts},
        {2, "matrix-tree consistency", criterion_matrix_tree},
        {3, "spectral estimator ratio in [0.5, 1.6]", criterion_theta},
        {4, "complete-graph asymptotic within 15%", criterion_mckay},
        {5, "2d-regular bounds bracket exact counts", criterion_regular_bounds},
        {6, "Monte Carlo estimators", criterion_monte_carlo},
        {7, "lemma suites on the built-in corpus", criterion_lemma_suites},
        {8, "byte-identical output across runs and thread counts", criterion_determinism},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    bool all_pass = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.check(false, std::string("exception: ") + e.what());
        }
        for (const auto& line : outcome.details) std::cout << "    " << line << "\n";
        std::cout << "criterion " << c.id << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << fmt(seconds_since(start), 3) << " s)\n";
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
