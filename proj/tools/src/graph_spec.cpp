#include "euler_orient_cli/graph_spec.hpp"

#include <charconv>
#include <filesystem>
#include <vector>

#include "euler_orient/errors.hpp"
#include "euler_orient/generators.hpp"
#include "euler_orient/graph_io.hpp"
#include "euler_orient/rng.hpp"
#include "euler_orient/spectral.hpp"

namespace eo::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    for (;;) {
        const auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("bad number '" + std::string(text) + "' in generator spec '" + std::string(spec) + "'");
    }
    return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view spec) {
    std::vector<int> values;
    for (auto part : split(text, ',')) values.push_back(parse_number<int>(part, spec));
    return values;
}

void require(bool ok, std::string_view spec, const char* what) {
    if (!ok) throw InputError("generator spec '" + std::string(spec) + "': " + what);
}

}  // namespace

bool looks_like_spec(std::string_view text) {
    for (std::string_view family : {"complete:", "bipartite:", "cycle:", "circulant:", "random:"}) {
        if (text.starts_with(family)) return true;
    }
    return false;
}

Graph generate_from_spec(std::string_view spec, std::uint64_t seed, int rejection_cap) {
    const auto parts = split(spec, ':');
    const std::string_view family = parts[0];
    if (family == "complete") {
        require(parts.size() == 2, spec, "expected complete:n");
        const int n = parse_number<int>(parts[1], spec);
        require(n >= 1, spec, "n must be positive");
        return complete(n);
    }
    if (family == "bipartite") {
        require(parts.size() == 2, spec, "expected bipartite:a,b");
        const auto sizes = parse_list(parts[1], spec);
        require(sizes.size() == 2 && sizes[0] >= 1 && sizes[1] >= 1, spec, "expected two positive part sizes");
        return complete_bipartite(sizes[0], sizes[1]);
    }
    if (family == "cycle") {
        require(parts.size() == 2, spec, "expected cycle:n");
        const int n = parse_number<int>(parts[1], spec);
        require(n >= 3, spec, "n must be at least 3");
        return cycle(n);
    }
    if (family == "circulant") {
        require(parts.size() == 3, spec, "expected circulant:n:offsets");
        const int n = parse_number<int>(parts[1], spec);
        require(n >= 3, spec, "n must be at least 3");
        const auto offsets = parse_list(parts[2], spec);
        return circulant(n, offsets);
    }
    if (family == "random") {
        require(parts.size() == 3 || parts.size() == 4, spec, "expected random:n:toggles[:gamma_min]");
        const int n = parse_number<int>(parts[1], spec);
        const int toggles = parse_number<int>(parts[2], spec);
        require(n >= 3 && toggles >= 0, spec, "need n >= 3 and toggles >= 0");
        if (parts.size() == 3) return random_even_graph(n, toggles, derive_seed(seed, 0));
        const double gamma_min = parse_number<double>(parts[3], spec);
        for (int attempt = 0; attempt < rejection_cap; ++attempt) {
            Graph g = random_even_graph(n, toggles, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
            if (is_connected(g) && algebraic_connectivity(g) / n >= gamma_min) return g;
        }
        throw ResourceCapError("no graph with lambda2/n >= " + std::string(parts[3]) + " after " +
                               std::to_string(rejection_cap) + " attempts");
    }
    throw InputError("unknown generator family in '" + std::string(spec) + "'");
}

Graph load_graph(const std::string& source, std::uint64_t seed) {
    if (looks_like_spec(source) && !std::filesystem::exists(source)) return generate_from_spec(source, seed);
    return read_edge_list(source);
}

}  // namespace eo::cli
