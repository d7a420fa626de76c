#include "euler_orient/graph.hpp"

#include <algorithm>
#include <string>

#include "euler_orient/errors.hpp"

namespace eo {

Graph::Graph(int n)
    : n_(n),
      words_((static_cast<std::size_t>(std::max(n, 0)) + 63) / 64),
      rows_(static_cast<std::size_t>(std::max(n, 0)) * words_, 0),
      degrees_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0) throw InputError("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    Graph g(n);
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for n=" + std::to_string(n));
        }
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InputError("duplicate edge {" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + "}");
    }
    for (const auto& e : edges) {
        g.rows_[static_cast<std::size_t>(e.u) * g.words_ + static_cast<std::size_t>(e.v) / 64] |=
            std::uint64_t{1} << (e.v % 64);
        g.rows_[static_cast<std::size_t>(e.v) * g.words_ + static_cast<std::size_t>(e.u) / 64] |=
            std::uint64_t{1} << (e.u % 64);
        ++g.degrees_[static_cast<std::size_t>(e.u)];
        ++g.degrees_[static_cast<std::size_t>(e.v)];
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1U;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = row[w];
        while (bits != 0) {
            const int bit = __builtin_ctzll(bits);
            out.push_back(static_cast<int>(w * 64) + bit);
            bits &= bits - 1;
        }
    }
    return out;
}

Graph Graph::without_vertices(std::span<const int> removed) const {
    std::vector<int> new_index(static_cast<std::size_t>(n_), 0);
    for (int v : removed) {
        if (v < 0 || v >= n_) throw InputError("removed vertex out of range");
        new_index[static_cast<std::size_t>(v)] = -1;
    }
    int next = 0;
    for (auto& idx : new_index) {
        if (idx == 0) idx = next++;
    }
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        const int a = new_index[static_cast<std::size_t>(e.u)];
        const int b = new_index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.push_back({a, b});
    }
    return from_edges(next, std::move(kept));
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InputError("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const auto& e : edges_) {
        mapped.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    }
    return from_edges(n_, std::move(mapped));
}

bool is_all_even(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) return false;
    }
    return true;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        component[static_cast<std::size_t>(start)] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (component[static_cast<std::size_t>(w)] < 0) {
                    component[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const int shift = a.vertex_count();
    for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace eo
