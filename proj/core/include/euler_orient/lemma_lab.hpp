#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "euler_orient/graph.hpp"

namespace eo {

struct Counterexample {
    Graph graph;
    std::map<std::string, double> parameters;
    std::string detail;
};

struct LemmaReport {
    std::string lemma;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;  // instances whose hypotheses fail
    std::map<std::string, double> observed;
    std::map<std::string, double> parameters;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;

    bool passed() const { return violations == 0; }
};

struct CorpusEntry {
    std::string id;
    Graph graph;
};
using Corpus = std::vector<CorpusEntry>;

// Named families plus `random_count` random even graphs with measured
// lambda2 / n >= 0.3. Deterministic in seed.
Corpus builtin_corpus(std::uint64_t seed = 1, int random_count = 100);

// --- Fiedler bounds -------------------------------------------------------
// lambda2(G) <= n/(n-1) * min degree, and lambda2(G - R) >= lambda2(G) - |R|
// for every removal set R; tolerance 1e-7 n.
LemmaReport check_fiedler(const Graph& g, std::span<const std::vector<int>> removals);
// Random removal sets of size 1, 2, 3 for every corpus graph.
LemmaReport verify_fiedler(const Corpus& corpus, std::uint64_t seed, int threads = 1);

// --- Condition numbers of I + X -------------------------------------------
// Random symmetric X with |X_ij| <= a/n: asserts mu_2(I+X) <= mu_inf(I+X) and
// records C = max mu_inf / mu_2. Near-singular draws are redrawn and counted.
LemmaReport check_condition_equiv(int n, double a, int trials, std::uint64_t seed);
// Runs the above for each size and flags growth: C(largest n) must not exceed
// twice C(smallest n).
LemmaReport check_condition_trend(double a, std::span<const int> sizes, int trials,
                                  std::uint64_t seed, int threads = 1);

// --- Inverse norm of Qhat -------------------------------------------------
// ||Qhat^-1||_1 == ||Qhat^-1||_inf and c_inf = n ||Qhat^-1||_inf <= 10 / gamma,
// gamma measured. Disconnected graphs are skipped.
LemmaReport check_inverse_norm(const Graph& g);
LemmaReport verify_inverse_norm(const Corpus& corpus, int threads = 1);

// --- Determinant drop under vertex removal (exact) -------------------------
// For sampled removal sequences of length r <= gamma n / 2: records
// c1 = max det Qhat(G_i) / (det Qhat(G_{i+1}) n_i) over single steps and
// c = max t(G) / (t(G_1) n), then checks det Qhat(G_r) (c1 n)^r >= det Qhat(G)
// and t(G_1) c n >= t(G) in exact rational arithmetic. Sequences that
// disconnect are skipped.
LemmaReport check_det_drop(const Graph& g, int r, int sequences, std::uint64_t seed);
LemmaReport verify_det_drop(const Corpus& corpus, std::uint64_t seed, int threads = 1);

// --- Layering --------------------------------------------------------------
struct Layering {
    std::vector<int> level;    // h(v)
    int height = 0;            // H
    double alpha = 0.0;        // target: every v outside A has >= alpha n lower neighbours
    double alpha_achieved = 0.0;  // min over v outside A of (#lower neighbours) / n
    bool full_complement_branch = false;  // |A| > n - gamma n / 4 case
};

// Iterated absorption: A_0 = A, then each round adds every outside vertex
// with at least alpha n neighbours already absorbed, alpha = |A| gamma^3 / (32 n)
// (or gamma / 4 with a single round when |A| > n - gamma n / 4). Throws
// InputError when a round absorbs nothing while vertices remain.
Layering build_layering(const Graph& g, std::span<const int> seed_set, double gamma);
LemmaReport check_layering(const Graph& g, std::span<const int> seed_set, double gamma);
// Seed set: a random ceil(n/3) vertices per connected corpus graph, gamma measured.
LemmaReport verify_layering(const Corpus& corpus, std::uint64_t seed, int threads = 1);

// --- |cos x| <= exp(-x^2/2) on |x| <= 9 pi / 16 ----------------------------
LemmaReport check_cos_bound(int grid_points);

// --- Gaussian integral over [-pi/2, pi/2]^n --------------------------------
// Integral of exp(-theta^T Q theta / 2) against
// 2^((n-1)/2) pi^((n+1)/2) n / sqrt(det Qhat). Gauss-Legendre tensor grid
// (40 nodes per axis, error from a 20-node rerun) for n <= 4, Monte Carlo with
// 10^7 samples for n = 5, 6. Larger or disconnected graphs are skipped.
LemmaReport check_gaussian_upper_bound(const Graph& g, std::uint64_t seed = 1);
LemmaReport verify_gaussian_upper_bound(const Corpus& corpus, std::uint64_t seed,
                                        int threads = 1);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int points, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace eo
