#include "euler_orient/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "euler_orient/errors.hpp"

namespace eo {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Exactly two non-negative integers separated by blanks.
bool parse_pair(std::string_view line, long long& a, long long& b) {
    auto read = [&](long long& out) {
        line = trim(line);
        if (line.empty()) return false;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
        if (ec != std::errc{} || out < 0) return false;
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
        return line.empty() || line.front() == ' ' || line.front() == '\t';
    };
    return read(a) && read(b) && trim(line).empty();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    std::size_t line_no = 0;
    std::size_t header_line = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        long long a = 0, b = 0;
        if (!parse_pair(line, a, b)) {
            throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
        }
        if (n < 0) {
            if (a < 1) throw ParseError(line_no, "vertex count must be positive");
            n = a;
            m = b;
            header_line = line_no;
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m) {
            throw ParseError(line_no, "more edges than the " + std::to_string(m) + " declared");
        }
        if (a >= n || b >= n) {
            throw ParseError(line_no, "vertex out of range (n=" + std::to_string(n) + ")");
        }
        if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
        const std::pair<int, int> key{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
        if (!seen.insert(key).second) {
            throw ParseError(line_no, "duplicate edge {" + std::to_string(key.first) + "," +
                                          std::to_string(key.second) + "}");
        }
        edges.push_back({key.first, key.second});
    }

    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    while (!comment.empty()) {
        const auto nl = comment.find('\n');
        out << "# " << comment.substr(0, nl) << '\n';
        comment.remove_prefix(nl == std::string_view::npos ? comment.size() : nl + 1);
    }
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_edge_list(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " +
                                       std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g, std::string_view comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << format_edge_list(g, comment);
}

}  // namespace eo
