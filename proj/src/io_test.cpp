#include "chromatica/error.hpp"
#include "chromatica/io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromatica;
using namespace chromatica::testing;

namespace {

std::string parse_error(const std::string& text, bool lines = false) {
    try {
        if (lines) io::parse_lines_text(text);
        else io::parse_graph_text(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        return e.what();
    }
    ADD_FAILURE() << "accepted: " << text;
    return "";
}

}  // namespace

TEST(GraphFile, Parses) {
    Graph g = io::parse_graph_text("# diamond\n4 5\n1 2\n1 3\n\n1 4 # spoke\n2 3\n2 4\n");
    EXPECT_EQ(g, diamond());
}

TEST(GraphFile, Rejects) {
    EXPECT_EQ(parse_error("3\n1 2\n"), "line 1: header must be \"n m\"");
    EXPECT_EQ(parse_error(""), "line 1: missing header \"n m\"");
    EXPECT_EQ(parse_error("x 1\n1 2\n"), "line 1: expected an integer, got 'x'");
    EXPECT_EQ(parse_error("0 0\n"), "line 1: vertex count must be at least 1");
    EXPECT_EQ(parse_error("3 2\n1 2\n"), "line 1: header declares 2 edges, file has 1");
    EXPECT_EQ(parse_error("3 1\n1 4\n"), "line 2: vertex out of range 1..3");
    EXPECT_EQ(parse_error("3 1\n2 2\n"), "line 2: loop at vertex 2");
    EXPECT_EQ(parse_error("# c\n3 2\n1 2\n2 1\n"), "line 4: duplicate edge");
    EXPECT_EQ(parse_error("3 1\n1 2 3\n"), "line 2: edge must be \"u v\"");
    EXPECT_EQ(parse_error("3 1\n1 2x\n"), "line 2: expected an integer, got '2x'");
}

TEST(GraphFile, RoundTrip) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 1 + i % 10, 0.4);
        std::string text = io::render_graph(g);
        EXPECT_EQ(io::parse_graph_text(text), g);
        EXPECT_EQ(io::render_graph(io::parse_graph_text(text)), text);
    }
    EXPECT_EQ(io::render_graph(Graph::path(3)), "3 2\n1 2\n2 3\n");
}

TEST(GraphFile, MissingFile) {
    try {
        io::load_graph("/nonexistent/graph");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

TEST(LinesFile, Parses) {
    auto a = io::parse_lines_text("# planes\n2 0 0\n0 -1 0\n\n1 1 123456789012345678901234567890\n");
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a.lines()[0], ProjLine(1, 0, 0));
    EXPECT_EQ(a.lines()[1], ProjLine(0, 1, 0));
    EXPECT_EQ(a.lines()[2].coeffs()[2], Integer("123456789012345678901234567890"));
    EXPECT_EQ(io::render_lines(a), "1 0 0\n0 1 0\n1 1 123456789012345678901234567890\n");
    EXPECT_EQ(io::render_lines(io::parse_lines_text(io::render_lines(a))), io::render_lines(a));
}

TEST(LinesFile, Rejects) {
    EXPECT_EQ(parse_error("0 0 0\n", true), "line 1: zero triple is not a line");
    EXPECT_EQ(parse_error("1 0 0\n-3 0 0\n", true), "line 2: duplicate line after normalization");
    EXPECT_EQ(parse_error("1 0\n", true), "line 1: line must be \"a b c\"");
    EXPECT_EQ(parse_error("1 0 z\n", true), "line 1: expected an integer, got 'z'");
    EXPECT_EQ(io::parse_lines_text("# nothing\n").size(), 0u);
}
