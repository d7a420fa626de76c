#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "euler_orient/graph.hpp"

namespace eo {

// Edge-list text format:
//
//   # optional comment lines anywhere
//   n m
//   u v        (m lines, 0 <= u, v < n)
//
// Blank lines are ignored. Loops, duplicate pairs, out-of-range vertices and
// an edge count that disagrees with the header raise ParseError carrying the
// 1-based line number.
Graph parse_edge_list(std::string_view text);

// Canonical form: header then edges in lexicographic (min, max) order, each
// line LF-terminated. Optional comment lines are emitted first, each prefixed
// with "# ".
std::string format_edge_list(const Graph& g, std::string_view comment = {});

Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     std::string_view comment = {});

}  // namespace eo
