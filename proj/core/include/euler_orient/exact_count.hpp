#pragma once

#include "euler_orient/big_count.hpp"
#include "euler_orient/graph.hpp"

namespace eo {

inline constexpr int kDefaultEdgeCap = 40;
inline constexpr int kDefaultFrontierCap = 20;

struct BacktrackOptions {
    int edge_cap = kDefaultEdgeCap;
    int threads = 1;
};

// Exact number of Eulerian orientations by depth-first search over edge
// directions. Edges are visited in DFS order from vertex 0; a branch is cut
// as soon as some vertex's |out - in| exceeds, or differs in parity from, its
// count of still-unoriented edges. With threads > 1 the first few edge
// choices are enumerated up front and the subtrees shared among workers.
// Returns 0 when any degree is odd. Throws ResourceCapError when m > edge_cap.
BigCount eo_count_backtrack(const Graph& g, const BacktrackOptions& options = {});

// Same quantity by a frontier dynamic program: edges are processed in order of
// their larger endpoint, and partial counts are keyed by the imbalance vector
// of the vertices that still have unprocessed edges. A vertex leaves the
// frontier with imbalance exactly 0. Throws ResourceCapError when the frontier
// grows past frontier_cap vertices.
BigCount eo_count_dp(const Graph& g, int frontier_cap = kDefaultFrontierCap);

}  // namespace eo
