#include "euler_orient/exact_count.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "euler_orient/errors.hpp"
#include "euler_orient/parallel.hpp"

namespace eo {
namespace {

// Edges in the order a depth-first traversal from vertex 0 first meets them;
// further components follow from their smallest vertex.
std::vector<Edge> dfs_edge_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<char> listed(static_cast<std::size_t>(n) * n, 0);
    std::vector<Edge> order;
    order.reserve(static_cast<std::size_t>(g.edge_count()));
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        visited[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                const auto key = static_cast<std::size_t>(std::min(v, w)) * n +
                                 static_cast<std::size_t>(std::max(v, w));
                if (!listed[key]) {
                    listed[key] = 1;
                    order.push_back({std::min(v, w), std::max(v, w)});
                }
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return order;
}

class Backtracker {
public:
    Backtracker(const Graph& g, std::vector<Edge> order)
        : order_(std::move(order)),
          residual_(static_cast<std::size_t>(g.vertex_count()), 0),
          remaining_(static_cast<std::size_t>(g.vertex_count()), 0) {
        for (int v = 0; v < g.vertex_count(); ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    // Replays the first `depth` choices encoded in `mask` (bit i set: edge i
    // points u -> v). Returns false if the prefix is already infeasible.
    bool apply_prefix(std::uint64_t mask, std::size_t depth) {
        for (std::size_t i = 0; i < depth; ++i) {
            if (!orient(i, ((mask >> i) & 1U) ? 1 : -1)) return false;
        }
        return true;
    }

    std::uint64_t count_from(std::size_t i) {
        if (i == order_.size()) return 1;
        std::uint64_t total = 0;
        for (int dir : {1, -1}) {
            if (orient(i, dir)) total += count_from(i + 1);
            undo(i, dir);
        }
        return total;
    }

private:
    bool feasible(int v) const {
        const int r = residual_[static_cast<std::size_t>(v)];
        const int rem = remaining_[static_cast<std::size_t>(v)];
        return std::abs(r) <= rem && (r - rem) % 2 == 0;
    }

    // dir = +1 orients u -> v. Always applied; the caller undoes it.
    bool orient(std::size_t i, int dir) {
        const Edge e = order_[i];
        residual_[static_cast<std::size_t>(e.u)] += dir;
        residual_[static_cast<std::size_t>(e.v)] -= dir;
        --remaining_[static_cast<std::size_t>(e.u)];
        --remaining_[static_cast<std::size_t>(e.v)];
        return feasible(e.u) && feasible(e.v);
    }

    void undo(std::size_t i, int dir) {
        const Edge e = order_[i];
        residual_[static_cast<std::size_t>(e.u)] -= dir;
        residual_[static_cast<std::size_t>(e.v)] += dir;
        ++remaining_[static_cast<std::size_t>(e.u)];
        ++remaining_[static_cast<std::size_t>(e.v)];
    }

    std::vector<Edge> order_;
    std::vector<int> residual_;   // out-degree minus in-degree so far
    std::vector<int> remaining_;  // unoriented incident edges
};

}  // namespace

BigCount eo_count_backtrack(const Graph& g, const BacktrackOptions& options) {
    if (g.edge_count() > options.edge_cap) {
        throw ResourceCapError("backtracking refused: " + std::to_string(g.edge_count()) +
                               " edges exceeds the cap of " + std::to_string(options.edge_cap));
    }
    // 64-bit leaf counters are exact up to 63 edges.
    if (g.edge_count() > 63) throw ResourceCapError("backtracking supports at most 63 edges");
    if (!is_all_even(g)) return 0;

    std::vector<Edge> order = dfs_edge_order(g);
    if (options.threads <= 1 || order.size() < 8) {
        Backtracker search(g, std::move(order));
        return BigCount(static_cast<unsigned long>(search.count_from(0)));
    }

    const std::size_t depth = std::min<std::size_t>(order.size() - 1, 10);
    const std::size_t tasks = std::size_t{1} << depth;
    std::vector<std::uint64_t> partial(tasks, 0);
    parallel_for(tasks, options.threads, [&](std::size_t mask) {
        Backtracker search(g, order);
        if (search.apply_prefix(mask, depth)) partial[mask] = search.count_from(depth);
    });
    BigCount total = 0;
    for (std::uint64_t c : partial) total += static_cast<unsigned long>(c);
    return total;
}

BigCount eo_count_dp(const Graph& g, int frontier_cap) {
    if (!is_all_even(g)) return 0;
    const int n = g.vertex_count();

    std::vector<Edge> order(g.edges().begin(), g.edges().end());
    std::stable_sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
        return std::max(a.u, a.v) != std::max(b.u, b.v) ? std::max(a.u, a.v) < std::max(b.u, b.v)
                                                        : std::min(a.u, a.v) < std::min(b.u, b.v);
    });

    std::vector<int> remaining(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);

    // Frontier keys hold residual + kOffset per active vertex, in slot order.
    constexpr int kOffset = 1 << 14;
    using Key = std::u16string;
    std::unordered_map<Key, BigCount> states{{Key{}, BigCount(1)}};
    std::vector<int> active;

    for (const Edge& e : order) {
        std::vector<int> extended = active;
        for (int x : {e.u, e.v}) {
            if (std::find(extended.begin(), extended.end(), x) == extended.end()) extended.push_back(x);
        }
        if (static_cast<int>(extended.size()) > frontier_cap) {
            throw ResourceCapError("frontier width " + std::to_string(extended.size()) +
                                   " exceeds the cap of " + std::to_string(frontier_cap));
        }
        const auto slot_u = static_cast<std::size_t>(
            std::find(extended.begin(), extended.end(), e.u) - extended.begin());
        const auto slot_v = static_cast<std::size_t>(
            std::find(extended.begin(), extended.end(), e.v) - extended.begin());

        const int rem_u = --remaining[static_cast<std::size_t>(e.u)];
        const int rem_v = --remaining[static_cast<std::size_t>(e.v)];

        std::vector<int> next_active;
        for (int x : extended) {
            if (remaining[static_cast<std::size_t>(x)] > 0) next_active.push_back(x);
        }

        std::unordered_map<Key, BigCount> next;
        next.reserve(states.size() * 2);
        std::vector<int> residual(extended.size());
        for (const auto& [key, count] : states) {
            for (std::size_t s = 0; s < extended.size(); ++s) {
                residual[s] = s < key.size() ? static_cast<int>(key[s]) - kOffset : 0;
            }
            for (int dir : {1, -1}) {
                const int ru = residual[slot_u] + dir;
                const int rv = residual[slot_v] - dir;
                if (std::abs(ru) > rem_u || std::abs(rv) > rem_v) continue;
                Key out;
                out.reserve(next_active.size());
                for (std::size_t s = 0; s < extended.size(); ++s) {
                    if (remaining[static_cast<std::size_t>(extended[s])] == 0) continue;
                    const int r = s == slot_u ? ru : s == slot_v ? rv : residual[s];
                    out.push_back(static_cast<char16_t>(r + kOffset));
                }
                next[std::move(out)] += count;
            }
        }
        states = std::move(next);
        active = std::move(next_active);
    }

    const auto it = states.find(Key{});
    return it == states.end() ? BigCount(0) : it->second;
}

}  // namespace eo
