#pragma once

#include <cstdint>
#include <span>

#include "euler_orient/graph.hpp"

namespace eo {

Graph complete(int n);

// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

Graph path(int n);

// j ~ j +- s (mod n) for every s in offsets; offsets must lie in 1..n/2.
// An offset of exactly n/2 contributes a single neighbor.
Graph circulant(int n, std::span<const int> offsets);
Graph cycle(int n);

// Starting graph: complete(n) for odd n, circulant(n, {1, 2}) for even n >= 6,
// cycle(4) for n = 4. Applies `toggles` triangle XOR moves (three distinct
// random vertices; each of the three pairs flips presence). Every move keeps
// all degrees even. Connectivity is not enforced.
Graph random_even_graph(int n, int toggles, std::uint64_t seed);

}  // namespace eo
