#pragma once

#include <optional>
#include <string>
#include <utility>

#include "euler_orient/big_count.hpp"
#include "euler_orient/graph.hpp"
#include "euler_orient/log_number.hpp"

namespace eo {

// 2^(m + n/2) * pi^(-n/2) / sqrt(t(G)), with t(G) the exact spanning-tree
// count. Requires a connected graph with all degrees even; InputError
// otherwise.
LogNumber theta_estimate(const Graph& g);

// Regular-tournament asymptotic (2^(n+1) / (pi n))^((n-1)/2) * n^(1/2) * e^(-1/2).
// Only odd n >= 3: K_n has even degrees exactly when n is odd.
LogNumber mckay_kn(int n);

// Asymptotic for K_{n,n}: e^-1 * 2^(n^2 + n - 1/2) / (pi^(n - 1/2) * n^(n-1)).
// Requires even n >= 2.
LogNumber isaev_knn(int n);

struct RegularBounds {
    LogNumber lower;  // 2^d * ((2d-1)!! / d!)^(n-1)
    LogNumber upper;  // ((2d)! / (d! d!))^(n/2)
};

// Bounds on EO(G) for a 2d-regular graph on n vertices.
RegularBounds regular_bounds(int n, int d);

// Notes attached to reports for the two documented index readings.
inline constexpr const char* kMckayParityNote =
    "asymptotic for EO(K_n) evaluated for odd n: K_n is Eulerian only for odd n";

struct EstimateReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    double lambda2 = 0.0;
    double gamma = 0.0;
    double ln_t = 0.0;
    LogNumber estimate;
    std::string method;
    std::optional<BigCount> exact;
    std::optional<double> ratio;  // exact / estimate; present iff exact is
    std::optional<std::string> note;
};

// Fills the spectral fields and, when `exact` is given, the ratio.
EstimateReport make_report(const Graph& g, std::string graph_id, std::string method,
                           LogNumber estimate, std::optional<BigCount> exact);

// Shape detection used to decide method applicability.
// n when g is exactly K_n.
std::optional<int> complete_order(const Graph& g);
// k when g is K_{k,k} under some labelling.
std::optional<int> balanced_biclique_order(const Graph& g);
// d when g is 2d-regular with d >= 1.
std::optional<int> half_regular_degree(const Graph& g);

}  // namespace eo
