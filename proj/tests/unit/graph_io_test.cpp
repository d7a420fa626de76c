#include <gtest/gtest.h>

#include <array>
#include <filesystem>

#include "euler_orient/errors.hpp"
#include "euler_orient/generators.hpp"
#include "euler_orient/graph_io.hpp"

namespace eo {
namespace {

int parse_error_line(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

TEST(EdgeList, ParsesTriangleAndCycle) {
    EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), complete(3));
    EXPECT_EQ(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"), cycle(4));
}

TEST(EdgeList, SkipsCommentsAndBlankLines) {
    EXPECT_EQ(parse_edge_list("# header\n\n3 3\n# mid\n0 1\n\n1 2\n0 2\n"), complete(3));
}

TEST(EdgeList, ReportsLineNumbers) {
    EXPECT_EQ(parse_error_line("2 1\n0 0"), 2);
    EXPECT_EQ(parse_error_line("3 2\n0 1\n1 0"), 3);
    EXPECT_EQ(parse_error_line("3 1\n0 7"), 2);
    EXPECT_EQ(parse_error_line("3 1\n0 x"), 2);
    EXPECT_EQ(parse_error_line("3\n"), 1);
    EXPECT_NE(parse_error_line("3 2\n0 1\n"), -1);
    EXPECT_NE(parse_error_line("3 1\n0 1\n1 2\n"), -1);
    EXPECT_NE(parse_error_line(""), -1);
}

TEST(EdgeList, RoundTrip) {
    for (const Graph& g : {complete(7), cycle(9), complete_bipartite(3, 4), circulant(11, std::array{1, 3}),
                           random_even_graph(13, 40, 5), Graph(4)}) {
        const std::string text = format_edge_list(g);
        EXPECT_EQ(parse_edge_list(text), g);
        EXPECT_EQ(format_edge_list(parse_edge_list(text)), text);
    }
}

TEST(EdgeList, CommentsAreEmittedAndIgnored) {
    const std::string text = format_edge_list(complete(3), "first\nsecond");
    EXPECT_EQ(text.rfind("# first\n# second\n3 3\n", 0), 0u);
    EXPECT_EQ(parse_edge_list(text), complete(3));
}

TEST(EdgeList, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "euler_orient_io_test.txt";
    write_edge_list(path, complete(5), "k5");
    EXPECT_EQ(read_edge_list(path), complete(5));
    std::filesystem::remove(path);
    EXPECT_THROW(read_edge_list(path), InputError);
}

}  // namespace
}  // namespace eo
