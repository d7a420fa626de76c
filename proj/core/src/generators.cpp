#include "euler_orient/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "euler_orient/errors.hpp"
#include "euler_orient/rng.hpp"

namespace eo {

Graph complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite graph needs a, b >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    }
    return Graph::from_edges(a + b, std::move(edges));
}

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph circulant(int n, std::span<const int> offsets) {
    if (n < 3) throw InputError("circulant needs n >= 3");
    std::set<std::pair<int, int>> pairs;
    for (int s : offsets) {
        if (s < 1 || s > n / 2) {
            throw InputError("circulant offset " + std::to_string(s) + " outside 1.." +
                             std::to_string(n / 2));
        }
        for (int j = 0; j < n; ++j) pairs.insert(std::minmax(j, (j + s) % n));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
    constexpr std::array<int, 1> kUnit{1};
    return circulant(n, kUnit);
}

Graph random_even_graph(int n, int toggles, std::uint64_t seed) {
    if (n < 3) throw InputError("random even graph needs n >= 3");
    if (toggles < 0) throw InputError("toggle count must be non-negative");

    Graph start;
    if (n % 2 == 1) {
        start = complete(n);
    } else if (n == 4) {
        start = cycle(4);
    } else {
        constexpr std::array<int, 2> kOffsets{1, 2};
        start = circulant(n, kOffsets);
    }

    const auto un = static_cast<std::size_t>(n);
    std::vector<char> present(un * un, 0);
    for (const auto& e : start.edges()) {
        present[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] = 1;
    }

    Rng rng(seed);
    for (int t = 0; t < toggles; ++t) {
        std::array<int, 3> tri{};
        tri[0] = static_cast<int>(uniform_index(rng, un));
        do {
            tri[1] = static_cast<int>(uniform_index(rng, un));
        } while (tri[1] == tri[0]);
        do {
            tri[2] = static_cast<int>(uniform_index(rng, un));
        } while (tri[2] == tri[0] || tri[2] == tri[1]);
        for (int i = 0; i < 3; ++i) {
            auto [u, v] = std::minmax(tri[static_cast<std::size_t>(i)],
                                      tri[static_cast<std::size_t>((i + 1) % 3)]);
            present[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] ^= 1;
        }
    }

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (present[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)]) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace eo
