#include "euler_orient/estimator.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "euler_orient/errors.hpp"
#include "euler_orient/spectral.hpp"

namespace eo {
namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

}  // namespace

LogNumber theta_estimate(const Graph& g) {
    if (!is_all_even(g)) throw InputError("theta estimate needs every degree even");
    if (!is_connected(g)) throw InputError("theta estimate needs a connected graph (t(G) = 0)");
    const double n = g.vertex_count();
    const double m = g.edge_count();
    const double ln_t = ln(spanning_tree_count(g));
    return LogNumber::from_log((m + n / 2) * kLn2 - (n / 2) * kLnPi - 0.5 * ln_t);
}

LogNumber mckay_kn(int n) {
    if (n < 3 || n % 2 == 0) {
        throw InputError("K_n asymptotic needs odd n >= 3 (EO(K_n) = 0 for even n)");
    }
    const double x = n;
    return LogNumber::from_log(((x - 1) / 2) * ((x + 1) * kLn2 - kLnPi - std::log(x)) +
                               0.5 * std::log(x) - 0.5);
}

LogNumber isaev_knn(int n) {
    if (n < 2 || n % 2 != 0) throw InputError("K_{n,n} asymptotic needs even n >= 2");
    const double x = n;
    return LogNumber::from_log(-1.0 + (x * x + x - 0.5) * kLn2 - (x - 0.5) * kLnPi -
                               (x - 1) * std::log(x));
}

RegularBounds regular_bounds(int n, int d) {
    if (d < 1 || n < 2) throw InputError("regular bounds need d >= 1 and n >= 2");
    const double dd = d;
    const double ln_central = std::lgamma(2 * dd + 1) - 2 * std::lgamma(dd + 1);  // ln C(2d, d)
    // (2d-1)!! / d! = (2d)! / (2^d d!^2)
    const double ln_ratio = ln_central - dd * kLn2;
    return {LogNumber::from_log(dd * kLn2 + (n - 1) * ln_ratio),
            LogNumber::from_log((n / 2.0) * ln_central)};
}

EstimateReport make_report(const Graph& g, std::string graph_id, std::string method,
                           LogNumber estimate, std::optional<BigCount> exact) {
    EstimateReport r;
    r.graph_id = std::move(graph_id);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    const SpectralSummary s = spectral_summary(g);
    r.lambda2 = s.lambda2;
    r.gamma = s.gamma;
    r.ln_t = ln(spanning_tree_count(g));
    r.estimate = estimate;
    r.method = std::move(method);
    if (exact) {
        r.ratio = estimate.is_zero() ? std::nullopt : std::optional<double>(ratio(*exact, estimate));
        r.exact = std::move(exact);
        if (!r.ratio) r.exact.reset();
    }
    return r;
}

std::optional<int> complete_order(const Graph& g) {
    const long n = g.vertex_count();
    if (n >= 1 && g.edge_count() == n * (n - 1) / 2) return static_cast<int>(n);
    return std::nullopt;
}

std::optional<int> balanced_biclique_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    const int k = n / 2;
    if (g.edge_count() != k * k || !is_connected(g)) return std::nullopt;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{0};
    side[0] = 0;
    int left = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (side[static_cast<std::size_t>(w)] < 0) {
                side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                left += side[static_cast<std::size_t>(w)] == 0;
                stack.push_back(w);
            } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                return std::nullopt;
            }
        }
    }
    // Bipartite with parts k, k and k^2 edges: every cross pair is present.
    return left == k ? std::optional<int>(k) : std::nullopt;
}

std::optional<int> half_regular_degree(const Graph& g) {
    if (g.vertex_count() < 2) return std::nullopt;
    const int d = g.degree(0);
    if (d < 2 || d % 2 != 0) return std::nullopt;
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d / 2;
}

}  // namespace eo
