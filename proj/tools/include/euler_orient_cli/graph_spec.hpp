#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "euler_orient/graph.hpp"

namespace eo::cli {

inline constexpr int kDefaultRejectionCap = 1000;

// complete:n, bipartite:a,b, cycle:n, circulant:n:o1,o2,...,
// random:n:toggles[:gamma_min]. Throws InputError on a malformed spec and
// ResourceCapError when rejection sampling runs out of attempts.
Graph generate_from_spec(std::string_view spec, std::uint64_t seed,
                         int rejection_cap = kDefaultRejectionCap);

bool looks_like_spec(std::string_view text);

// Loads a file, or builds a graph when `source` is a generator spec that does
// not name an existing file.
Graph load_graph(const std::string& source, std::uint64_t seed);

}  // namespace eo::cli
