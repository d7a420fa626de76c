#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace eo {

// Unordered pair stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

using DegreeSequence = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// the edge list is kept in lexicographic order and adjacency is mirrored in
// per-vertex bit rows.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n >= 0 vertices.
    explicit Graph(int n);

    // Throws InputError on out-of-range endpoints, loops or duplicate pairs.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    std::vector<int> neighbors(int v) const;

    // Graph with the given vertices (and incident edges) deleted; survivors
    // are renumbered in increasing order.
    Graph without_vertices(std::span<const int> removed) const;

    // Vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
    Graph relabeled(std::span<const int> perm) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> degrees_;
};

bool is_all_even(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

// Components in order of their smallest vertex; each list sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Disjoint union with b's vertices shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace eo
