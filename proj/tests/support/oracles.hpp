#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "euler_orient/graph.hpp"

namespace eo::testing {

// Tries all 2^m orientations.
inline mpz_class brute_force_eo(const Graph& g) {
    const int m = g.edge_count();
    const auto edges = g.edges();
    std::vector<int> balance(static_cast<std::size_t>(g.vertex_count()));
    mpz_class count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::fill(balance.begin(), balance.end(), 0);
        for (int i = 0; i < m; ++i) {
            const int dir = (mask >> i) & 1 ? 1 : -1;
            balance[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)] += dir;
            balance[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)] -= dir;
        }
        bool ok = true;
        for (int b : balance) ok = ok && b == 0;
        if (ok) ++count;
    }
    return count;
}

namespace detail {

using MultiEdges = std::vector<std::pair<int, int>>;

inline bool multigraph_connected(int n, const MultiEdges& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

inline mpz_class deletion_contraction(int n, MultiEdges edges) {
    if (n == 1) return 1;
    if (!multigraph_connected(n, edges)) return 0;
    const auto [u, v] = edges.back();
    edges.pop_back();
    mpz_class deleted = deletion_contraction(n, edges);
    // Contract v into u, relabel n-1 as v, drop loops.
    MultiEdges contracted;
    for (auto [a, b] : edges) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == n - 1) a = v;
        if (b == n - 1) b = v;
        if (a != b) contracted.emplace_back(a, b);
    }
    return deleted + deletion_contraction(n - 1, std::move(contracted));
}

}  // namespace detail

// Spanning trees by t(G) = t(G - e) + t(G / e) on multigraphs.
inline mpz_class deletion_contraction_trees(const Graph& g) {
    detail::MultiEdges edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return detail::deletion_contraction(g.vertex_count(), std::move(edges));
}

}  // namespace eo::testing
