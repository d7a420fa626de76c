#include "euler_orient/lemma_lab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "euler_orient/errors.hpp"
#include "euler_orient/generators.hpp"
#include "euler_orient/parallel.hpp"
#include "euler_orient/rng.hpp"
#include "euler_orient/spectral.hpp"

namespace eo {
namespace {

constexpr double kCorpusGammaMin = 0.3;
constexpr int kCorpusRejectionCap = 1000;

// Observed keys starting with "max_" / "min_" merge by max / min; any other
// key is summed.
void merge_into(LemmaReport& total, const LemmaReport& part) {
    total.instances += part.instances;
    total.violations += part.violations;
    total.skipped += part.skipped;
    for (const auto& [key, value] : part.observed) {
        auto it = total.observed.find(key);
        if (it == total.observed.end()) {
            total.observed.emplace(key, value);
        } else if (key.starts_with("max_")) {
            it->second = std::max(it->second, value);
        } else if (key.starts_with("min_")) {
            it->second = std::min(it->second, value);
        } else {
            it->second += value;
        }
    }
    total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                 part.counterexamples.end());
    for (const auto& note : part.notes) {
        if (std::find(total.notes.begin(), total.notes.end(), note) == total.notes.end()) {
            total.notes.push_back(note);
        }
    }
}

void observe_max(LemmaReport& r, const std::string& key, double value) {
    auto [it, inserted] = r.observed.emplace(key, value);
    if (!inserted) it->second = std::max(it->second, value);
}

void observe_min(LemmaReport& r, const std::string& key, double value) {
    auto [it, inserted] = r.observed.emplace(key, value);
    if (!inserted) it->second = std::min(it->second, value);
}

void violate(LemmaReport& r, const Graph& g, std::map<std::string, double> params, std::string detail) {
    ++r.violations;
    r.counterexamples.push_back({g, std::move(params), std::move(detail)});
}

template <typename Check>
LemmaReport over_corpus(const std::string& lemma, const Corpus& corpus, int threads, Check&& check) {
    std::vector<LemmaReport> parts(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) { parts[i] = check(i, corpus[i]); });
    LemmaReport total;
    total.lemma = lemma;
    for (auto& p : parts) {
        for (auto& c : p.counterexamples) c.detail = corpus[&p - parts.data()].id + ": " + c.detail;
        merge_into(total, p);
    }
    return total;
}

std::vector<int> random_subset(Rng& rng, int n, int size) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < size; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(uniform_index(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    all.resize(static_cast<std::size_t>(size));
    return all;
}

double to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace

Corpus builtin_corpus(std::uint64_t seed, int random_count) {
    Corpus corpus;
    auto add = [&](std::string id, Graph g) { corpus.push_back({std::move(id), std::move(g)}); };
    for (int n : {2, 3, 4, 5, 7, 9}) add("complete:" + std::to_string(n), complete(n));
    for (int k : {2, 3, 4}) {
        add("bipartite:" + std::to_string(k) + "," + std::to_string(k), complete_bipartite(k, k));
    }
    for (int n = 4; n <= 10; ++n) add("cycle:" + std::to_string(n), cycle(n));
    add("circulant:8:1,2", circulant(8, std::array{1, 2}));
    add("circulant:9:1,2", circulant(9, std::array{1, 2}));
    add("circulant:11:1,2,3", circulant(11, std::array{1, 2, 3}));
    add("two-triangles", disjoint_union(complete(3), complete(3)));

    for (int i = 0; i < random_count; ++i) {
        Rng pick(derive_seed(seed, static_cast<std::uint64_t>(i)));
        bool found = false;
        for (int attempt = 0; attempt < kCorpusRejectionCap && !found; ++attempt) {
            const int n = 6 + static_cast<int>(uniform_index(pick, 11));  // 6..16
            const int toggles = 1 + static_cast<int>(uniform_index(pick, static_cast<std::uint64_t>(n)));
            const std::uint64_t graph_seed = pick();
            Graph g = random_even_graph(n, toggles, graph_seed);
            if (!is_connected(g) || algebraic_connectivity(g) < kCorpusGammaMin * n) continue;
            add("random:" + std::to_string(n) + ":" + std::to_string(toggles) + "@" +
                    std::to_string(graph_seed),
                std::move(g));
            found = true;
        }
        if (!found) throw ResourceCapError("corpus generation exceeded the rejection cap");
    }
    return corpus;
}

LemmaReport check_fiedler(const Graph& g, std::span<const std::vector<int>> removals) {
    LemmaReport r;
    r.lemma = "fiedler";
    const int n = g.vertex_count();
    if (n < 2) {
        ++r.skipped;
        return r;
    }
    const double tol = 1e-7 * n;
    const double lambda2 = algebraic_connectivity(g);
    const DegreeSequence deg = degree_sequence(g);
    const double upper = static_cast<double>(n) / (n - 1) * *std::min_element(deg.begin(), deg.end());

    ++r.instances;
    if (lambda2 > upper + tol) {
        violate(r, g, {{"lambda2", lambda2}, {"upper", upper}},
                "lambda2 exceeds n/(n-1) * min degree");
    }
    if (upper > 0) observe_max(r, "max_lambda2_over_upper", lambda2 / upper);

    for (const auto& removed : removals) {
        const Graph reduced = g.without_vertices(removed);
        if (reduced.vertex_count() < 2) {
            ++r.skipped;
            continue;
        }
        ++r.instances;
        const double reduced_lambda2 = algebraic_connectivity(reduced);
        const double margin = reduced_lambda2 - (lambda2 - static_cast<double>(removed.size()));
        observe_min(r, "min_removal_margin", margin);
        if (margin < -tol) {
            violate(r, g, {{"r", static_cast<double>(removed.size())}, {"lambda2", lambda2},
                           {"lambda2_reduced", reduced_lambda2}},
                    "lambda2 dropped by more than r under vertex removal");
        }
    }
    return r;
}

LemmaReport verify_fiedler(const Corpus& corpus, std::uint64_t seed, int threads) {
    return over_corpus("fiedler", corpus, threads, [&](std::size_t i, const CorpusEntry& entry) {
        Rng rng(derive_seed(seed, i));
        const int n = entry.graph.vertex_count();
        std::vector<std::vector<int>> removals;
        for (int r = 1; r <= 3 && r < n - 1; ++r) {
            for (int k = 0; k < 2; ++k) removals.push_back(random_subset(rng, n, r));
        }
        return check_fiedler(entry.graph, removals);
    });
}

LemmaReport check_condition_equiv(int n, double a, int trials, std::uint64_t seed) {
    if (n < 1 || !(a > 0.0) || trials < 1) throw InputError("condition check needs n >= 1, a > 0, trials >= 1");
    LemmaReport r;
    r.lemma = "condition";
    r.parameters = {{"a", a}, {"n", static_cast<double>(n)}, {"trials", static_cast<double>(trials)}};
    Rng rng(seed);
    const double bound = a / n;
    std::uint64_t discarded = 0;
    int done = 0;
    while (done < trials) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const double x = uniform_real(rng, -bound, bound);
                m(i, j) += x;
                if (j != i) m(j, i) += x;
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (!lu.isInvertible() || lu.rcond() < 1e-12) {
            if (++discarded > 100ULL * static_cast<std::uint64_t>(trials)) {
                throw ResourceCapError("too many singular draws in condition check");
            }
            continue;
        }
        ++done;
        const Eigen::MatrixXd inv = lu.inverse();
        const double mu2 = matrix_norm(m, Norm::Two) * matrix_norm(inv, Norm::Two);
        const double mu_inf = matrix_norm(m, Norm::Inf) * matrix_norm(inv, Norm::Inf);
        ++r.instances;
        if (mu2 > mu_inf * (1.0 + 1e-12)) {
            violate(r, Graph(n), {{"mu2", mu2}, {"mu_inf", mu_inf}}, "mu_2(I+X) > mu_inf(I+X)");
        }
        observe_max(r, "max_C", mu_inf / mu2);
        observe_max(r, "max_mu2", mu2);
    }
    r.observed["discarded"] = static_cast<double>(discarded);
    return r;
}

LemmaReport check_condition_trend(double a, std::span<const int> sizes, int trials, std::uint64_t seed,
                                  int threads) {
    if (sizes.empty()) throw InputError("condition trend needs at least one size");
    std::vector<LemmaReport> parts(sizes.size());
    parallel_for(sizes.size(), threads, [&](std::size_t i) {
        parts[i] = check_condition_equiv(sizes[i], a, trials, derive_seed(seed, static_cast<std::uint64_t>(sizes[i])));
    });
    LemmaReport total;
    total.lemma = "condition";
    total.parameters = {{"a", a}, {"trials", static_cast<double>(trials)}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        total.observed["C_n" + std::to_string(sizes[i])] = parts[i].observed.at("max_C");
        parts[i].parameters.clear();
        merge_into(total, parts[i]);
    }
    const double first = parts.front().observed.at("max_C");
    const double last = parts.back().observed.at("max_C");
    total.observed["growth_ratio"] = last / first;
    if (last > 2.0 * first) {
        ++total.violations;
        total.notes.push_back("empirical C grows with n: C(" + std::to_string(sizes.back()) + ") > 2 C(" +
                              std::to_string(sizes.front()) + ")");
    }
    return total;
}

LemmaReport check_inverse_norm(const Graph& g) {
    LemmaReport r;
    r.lemma = "invnorm";
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) {
        ++r.skipped;
        r.notes.push_back("disconnected graph skipped: Qhat singular direction");
        return r;
    }
    const double gamma = algebraic_connectivity(g) / n;
    const Eigen::MatrixXd q = qhat(g).to_dense();
    const Eigen::MatrixXd inv = q.llt().solve(Eigen::MatrixXd::Identity(n, n));
    const double norm1 = matrix_norm(inv, Norm::One);
    const double norm_inf = matrix_norm(inv, Norm::Inf);
    const double c_inf = n * norm_inf;

    ++r.instances;
    if (std::abs(norm1 - norm_inf) > 1e-9 * norm_inf) {
        violate(r, g, {{"norm1", norm1}, {"norm_inf", norm_inf}}, "||Qhat^-1||_1 != ||Qhat^-1||_inf");
    }
    if (c_inf > 10.0 / gamma) {
        violate(r, g, {{"c_inf", c_inf}, {"gamma", gamma}}, "c_inf exceeds 10 / gamma");
    }
    observe_max(r, "max_c_inf", c_inf);
    observe_max(r, "max_c_inf_times_gamma", c_inf * gamma);
    observe_min(r, "min_gamma", gamma);
    return r;
}

LemmaReport verify_inverse_norm(const Corpus& corpus, int threads) {
    return over_corpus("invnorm", corpus, threads,
                       [](std::size_t, const CorpusEntry& entry) { return check_inverse_norm(entry.graph); });
}

namespace {

// Exact determinant chain along one removal sequence.
struct DetChain {
    Graph graph;
    int n = 0;
    std::vector<BigInt> det_qhat;  // det Qhat(G_i), i = 0..r
    BigCount t0, t1;               // t(G), t(G_1)
};

struct DetDropData {
    LemmaReport report;
    std::vector<DetChain> chains;
};

DetDropData collect_det_chains(const Graph& g, int r, int sequences, std::uint64_t seed) {
    DetDropData out;
    out.report.lemma = "detdrop";
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g)) {
        ++out.report.skipped;
        out.report.notes.push_back("disconnected or tiny graph skipped: hypothesis lambda2 > 0 fails");
        return out;
    }
    const double gamma = algebraic_connectivity(g) / n;
    if (r < 1 || r > gamma * n / 2 || r > n - 2) {
        ++out.report.skipped;
        out.report.notes.push_back("removal length outside 1 <= r <= gamma n / 2 skipped");
        return out;
    }
    const BigInt det0 = det_qhat_exact(g);
    const BigCount t0 = spanning_tree_count(g);
    Rng rng(seed);
    for (int s = 0; s < sequences; ++s) {
        const std::vector<int> order = random_subset(rng, n, r);
        DetChain chain{g, n, {det0}, t0, 0};
        bool ok = true;
        for (int i = 1; i <= r && ok; ++i) {
            const Graph reduced = g.without_vertices(std::span(order).first(static_cast<std::size_t>(i)));
            if (!is_connected(reduced)) {
                ok = false;
                break;
            }
            chain.det_qhat.push_back(det_qhat_exact(reduced));
            if (i == 1) chain.t1 = spanning_tree_count(reduced);
        }
        if (!ok) {
            ++out.report.skipped;
            out.report.notes.push_back("removal sequence disconnected the graph; skipped");
            continue;
        }
        out.chains.push_back(std::move(chain));
    }
    return out;
}

// Largest single-step drop det Qhat(G_{i-1}) / (det Qhat(G_i) n_{i-1}) and
// largest t(G) / (t(G_1) n) over the chains.
void max_constants(const std::vector<DetChain>& chains, mpq_class& c1, mpq_class& c) {
    for (const auto& chain : chains) {
        for (std::size_t i = 1; i < chain.det_qhat.size(); ++i) {
            const long n_prev = chain.n - static_cast<long>(i) + 1;
            mpq_class step(chain.det_qhat[i - 1], chain.det_qhat[i] * n_prev);
            step.canonicalize();
            if (step > c1) c1 = step;
        }
        mpq_class tree(chain.t0, chain.t1 * chain.n);
        tree.canonicalize();
        if (tree > c) c = tree;
    }
}

void check_chains(LemmaReport& report, const std::vector<DetChain>& chains, const mpq_class& c1,
                  const mpq_class& c) {
    for (const auto& chain : chains) {
        const auto r = static_cast<unsigned long>(chain.det_qhat.size() - 1);
        ++report.instances;
        // det(G_r) (c1 n)^r >= det(G)  <=>  det(G_r) (p n)^r >= det(G) q^r
        BigInt p_n = c1.get_num() * chain.n;
        BigInt lhs, q_pow, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), p_n.get_mpz_t(), r);
        lhs *= chain.det_qhat.back();
        mpz_pow_ui(q_pow.get_mpz_t(), c1.get_den().get_mpz_t(), r);
        rhs = chain.det_qhat.front() * q_pow;
        if (lhs < rhs) {
            violate(report, chain.graph, {{"r", static_cast<double>(r)}, {"c1", to_double(c1)}},
                    "det Qhat(G_r) < det Qhat(G) / (c1 n)^r");
        }
        ++report.instances;
        if (chain.t1 * c.get_num() * chain.n < chain.t0 * c.get_den()) {
            violate(report, chain.graph, {{"c", to_double(c)}}, "t(G_1) < t(G) / (c n)");
        }
    }
}

}  // namespace

LemmaReport check_det_drop(const Graph& g, int r, int sequences, std::uint64_t seed) {
    DetDropData data = collect_det_chains(g, r, sequences, seed);
    mpq_class c1 = 0, c = 0;
    max_constants(data.chains, c1, c);
    check_chains(data.report, data.chains, c1, c);
    if (!data.chains.empty()) {
        data.report.observed["max_c1"] = to_double(c1);
        data.report.observed["max_c"] = to_double(c);
    }
    data.report.parameters["r"] = r;
    return data.report;
}

LemmaReport verify_det_drop(const Corpus& corpus, std::uint64_t seed, int threads) {
    std::vector<DetDropData> parts(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        const Graph& g = corpus[i].graph;
        int r = 0;
        if (g.vertex_count() >= 3 && is_connected(g)) {
            r = std::min(3, static_cast<int>(std::floor(algebraic_connectivity(g) / 2)));
        }
        parts[i] = collect_det_chains(g, r, 3, derive_seed(seed, i));
    });
    mpq_class c1 = 0, c = 0;
    for (const auto& p : parts) max_constants(p.chains, c1, c);

    LemmaReport total;
    total.lemma = "detdrop";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        check_chains(parts[i].report, parts[i].chains, c1, c);
        for (auto& ce : parts[i].report.counterexamples) ce.detail = corpus[i].id + ": " + ce.detail;
        merge_into(total, parts[i].report);
    }
    total.observed["max_c1"] = to_double(c1);
    total.observed["max_c"] = to_double(c);
    return total;
}

Layering build_layering(const Graph& g, std::span<const int> seed_set, double gamma) {
    const int n = g.vertex_count();
    if (n < 1) throw InputError("layering needs a non-empty graph");
    if (!(gamma > 0.0)) throw InputError("layering needs gamma > 0");
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    int seed_size = 0;
    for (int v : seed_set) {
        if (v < 0 || v >= n) throw InputError("seed vertex out of range");
        if (level[static_cast<std::size_t>(v)] == 0) throw InputError("duplicate seed vertex");
        level[static_cast<std::size_t>(v)] = 0;
        ++seed_size;
    }
    if (seed_size == 0) throw InputError("layering needs a non-empty seed set");

    Layering out;
    const double a = static_cast<double>(seed_size) / n;
    int remaining = n - seed_size;
    if (seed_size > n - gamma * n / 4) {
        out.full_complement_branch = true;
        out.alpha = gamma / 4;
        for (auto& h : level) {
            if (h < 0) h = 1;
        }
        out.height = remaining > 0 ? 1 : 0;
    } else {
        out.alpha = a * gamma * gamma * gamma / 32;
        const auto threshold = static_cast<int>(std::ceil(out.alpha * n));
        int k = 0;
        while (remaining > 0) {
            ++k;
            std::vector<int> absorbed;
            for (int v = 0; v < n; ++v) {
                if (level[static_cast<std::size_t>(v)] >= 0) continue;
                int inside = 0;
                for (int w : g.neighbors(v)) inside += level[static_cast<std::size_t>(w)] >= 0;
                if (inside >= threshold) absorbed.push_back(v);
            }
            if (absorbed.empty()) {
                throw InputError("layering stalled at level " + std::to_string(k) + " with " +
                                 std::to_string(remaining) + " vertices unassigned");
            }
            for (int v : absorbed) level[static_cast<std::size_t>(v)] = k;
            remaining -= static_cast<int>(absorbed.size());
        }
        out.height = k;
    }

    out.alpha_achieved = 1.0;  // vacuous when every vertex is in the seed set
    for (int v = 0; v < n; ++v) {
        if (level[static_cast<std::size_t>(v)] == 0) continue;
        int lower = 0;
        for (int w : g.neighbors(v)) lower += level[static_cast<std::size_t>(w)] < level[static_cast<std::size_t>(v)];
        out.alpha_achieved = std::min(out.alpha_achieved, static_cast<double>(lower) / n);
    }
    out.level = std::move(level);
    return out;
}

LemmaReport check_layering(const Graph& g, std::span<const int> seed_set, double gamma) {
    LemmaReport r;
    r.lemma = "layering";
    const int n = g.vertex_count();
    r.parameters = {{"gamma", gamma}, {"a", n ? static_cast<double>(seed_set.size()) / n : 0.0}};
    if (n < 2 || !is_connected(g) || algebraic_connectivity(g) < gamma * n - zero_eigenvalue_threshold(n)) {
        ++r.skipped;
        r.notes.push_back("hypothesis lambda2 >= gamma n fails; skipped");
        return r;
    }
    ++r.instances;
    Layering layering;
    try {
        layering = build_layering(g, seed_set, gamma);
    } catch (const InputError& e) {
        violate(r, g, r.parameters, e.what());
        return r;
    }

    std::vector<char> in_seed(static_cast<std::size_t>(n), 0);
    for (int v : seed_set) in_seed[static_cast<std::size_t>(v)] = 1;
    const auto threshold = static_cast<int>(std::ceil(layering.alpha * n));
    for (int v = 0; v < n; ++v) {
        const int h = layering.level[static_cast<std::size_t>(v)];
        if (in_seed[static_cast<std::size_t>(v)]) {
            if (h != 0) violate(r, g, r.parameters, "seed vertex " + std::to_string(v) + " has h != 0");
            continue;
        }
        if (h < 0 || h > layering.height) {
            violate(r, g, r.parameters, "vertex " + std::to_string(v) + " has h outside [0, H]");
            continue;
        }
        int lower = 0;
        for (int w : g.neighbors(v)) lower += layering.level[static_cast<std::size_t>(w)] < h;
        if (lower < threshold) {
            violate(r, g, r.parameters,
                    "vertex " + std::to_string(v) + " has " + std::to_string(lower) +
                        " lower neighbours, needs " + std::to_string(threshold));
        }
    }
    const double height_cap = std::ceil(1.0 / layering.alpha) + 1.0;
    if (layering.height > height_cap) {
        violate(r, g, r.parameters, "layer count exceeds ceil(1/alpha) + 1");
    }
    observe_max(r, "max_H", layering.height);
    observe_min(r, "min_alpha", layering.alpha);
    observe_min(r, "min_alpha_achieved", layering.alpha_achieved);
    return r;
}

LemmaReport verify_layering(const Corpus& corpus, std::uint64_t seed, int threads) {
    return over_corpus("layering", corpus, threads, [&](std::size_t i, const CorpusEntry& entry) {
        const Graph& g = entry.graph;
        const int n = g.vertex_count();
        if (n < 2 || !is_connected(g)) {
            LemmaReport r;
            r.lemma = "layering";
            ++r.skipped;
            r.notes.push_back("hypothesis lambda2 >= gamma n fails; skipped");
            return r;
        }
        Rng rng(derive_seed(seed, i));
        const std::vector<int> seeds = random_subset(rng, n, (n + 2) / 3);
        LemmaReport r = check_layering(g, seeds, algebraic_connectivity(g) / n);
        r.parameters.clear();
        return r;
    });
}

LemmaReport check_cos_bound(int grid_points) {
    if (grid_points < 1000) throw InputError("cos bound check needs at least 1000 grid points");
    LemmaReport r;
    r.lemma = "cosbound";
    r.parameters["grid_points"] = grid_points;
    const double limit = 9.0 * std::numbers::pi / 16.0;
    double max_excess = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        const double x = -limit + 2.0 * limit * i / (grid_points - 1);
        const double excess = std::abs(std::cos(x)) - std::exp(-x * x / 2);
        max_excess = std::max(max_excess, excess);
        ++r.instances;
        if (excess > 1e-12) violate(r, Graph(), {{"x", x}}, "|cos x| > exp(-x^2/2)");
    }
    r.observed["max_excess"] = max_excess;

    // The bound must break somewhere beyond the range.
    std::optional<double> witness;
    constexpr int kScan = 10000;
    for (int i = 1; i < kScan && !witness; ++i) {
        const double x = limit + (std::numbers::pi - limit) * i / kScan;
        if (std::abs(std::cos(x)) > std::exp(-x * x / 2) + 1e-12) witness = x;
    }
    if (witness) {
        r.observed["witness_x"] = *witness;
    } else {
        ++r.violations;
        r.notes.push_back("no failure witness found in (9pi/16, pi)");
    }
    return r;
}

void gauss_legendre(int points, std::vector<double>& nodes, std::vector<double>& weights) {
    if (points < 1) throw InputError("Gauss-Legendre needs at least one point");
    nodes.assign(static_cast<std::size_t>(points), 0.0);
    weights.assign(static_cast<std::size_t>(points), 0.0);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double pk = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (points == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= points; ++k) {
            const double pk = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = points == 1 ? 1.0 : points * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(points - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(points - 1 - i)] = w;
    }
}

namespace {

// Tensor Gauss-Legendre over [-pi/2, pi/2]^n of exp(-sum_edges Delta^2 / 2).
double box_quadrature(const Graph& g, int points) {
    std::vector<double> x, w;
    gauss_legendre(points, x, w);
    const double half = std::numbers::pi / 2;
    for (auto& v : x) v *= half;
    for (auto& v : w) v *= half;

    const int n = g.vertex_count();
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    std::vector<double> theta(static_cast<std::size_t>(n));
    double total = 0.0;
    for (;;) {
        double weight = 1.0;
        for (int j = 0; j < n; ++j) {
            theta[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
            weight *= w[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        }
        double quad = 0.0;
        for (const auto& e : g.edges()) {
            const double d = theta[static_cast<std::size_t>(e.u)] - theta[static_cast<std::size_t>(e.v)];
            quad += d * d;
        }
        total += weight * std::exp(-quad / 2);
        int j = 0;
        while (j < n && ++idx[static_cast<std::size_t>(j)] == points) idx[static_cast<std::size_t>(j++)] = 0;
        if (j == n) break;
    }
    return total;
}

// Monte Carlo version; returns {estimate, 3 * standard error}.
std::pair<double, double> box_monte_carlo(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
    Rng rng(seed);
    const int n = g.vertex_count();
    const double half = std::numbers::pi / 2;
    std::vector<double> theta(static_cast<std::size_t>(n));
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t i = 1; i <= samples; ++i) {
        for (auto& t : theta) t = uniform_real(rng, -half, half);
        double quad = 0.0;
        for (const auto& e : g.edges()) {
            const double d = theta[static_cast<std::size_t>(e.u)] - theta[static_cast<std::size_t>(e.v)];
            quad += d * d;
        }
        const double f = std::exp(-quad / 2);
        const double delta = f - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (f - mean);
    }
    const double volume = std::pow(std::numbers::pi, n);
    const double se = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
    return {volume * mean, 3.0 * volume * se};
}

}  // namespace

LemmaReport check_gaussian_upper_bound(const Graph& g, std::uint64_t seed) {
    LemmaReport r;
    r.lemma = "gaussbound";
    const int n = g.vertex_count();
    if (n < 2 || n > 6 || !is_connected(g)) {
        ++r.skipped;
        r.notes.push_back("only connected graphs with 2 <= n <= 6 are integrated");
        return r;
    }
    const double bound = std::exp(0.5 * (n - 1) * std::numbers::ln2 + 0.5 * (n + 1) * std::log(std::numbers::pi) +
                                  std::log(static_cast<double>(n)) - 0.5 * log_det_qhat(g));
    double integral = 0.0, error = 0.0;
    if (n <= 4) {
        integral = box_quadrature(g, 40);
        error = std::abs(integral - box_quadrature(g, 20));
    } else {
        std::tie(integral, error) = box_monte_carlo(g, 10'000'000, seed);
    }
    ++r.instances;
    std::map<std::string, double> params{{"integral", integral}, {"bound", bound}, {"error", error}};
    if (integral - error > bound) violate(r, g, params, "Gaussian box integral exceeds the bound");
    if (error > 0.1 * (bound - integral)) violate(r, g, params, "integration error exceeds 10% of the bound gap");
    observe_max(r, "max_slack_ratio", integral / bound);
    observe_max(r, "max_integration_error", error);
    return r;
}

LemmaReport verify_gaussian_upper_bound(const Corpus& corpus, std::uint64_t seed, int threads) {
    return over_corpus("gaussbound", corpus, threads, [&](std::size_t i, const CorpusEntry& entry) {
        return check_gaussian_upper_bound(entry.graph, derive_seed(seed, i));
    });
}

}  // namespace eo
