#include "chromatica/chromatic.hpp"
#include "chromatica/os_coefficients.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chromatica;
using namespace chromatica::testing;

namespace {

// Injective maps of pattern P into G that carry edges to edges, divided by
// |Aut(P)|: the number of (not necessarily induced) copies of P in G.
std::uint64_t copies(const Graph& p, const Graph& g) {
    const std::size_t k = p.vertex_count(), n = g.vertex_count();
    if (k > n) return 0;
    std::vector<Vertex> image(k);
    std::uint64_t embeddings = 0;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            ++embeddings;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (Vertex j : p.neighbors(static_cast<Vertex>(i)))
                if (j < i && !g.has_edge(image[j], v)) ok = false;
            if (!ok) continue;
            used[v] = true;
            image[i] = v;
            self(self, i + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    std::uint64_t automorphisms = 0;
    {
        std::vector<Vertex> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (relabel(p, perm) == p) ++automorphisms;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return embeddings / automorphisms;
}

PatternCounts by_embedding(const Graph& g) {
    return PatternCounts{g.edge_count(), copies(Graph::complete(3), g), copies(Graph::cycle(4), g),
                         copies(Graph::complete(4), g), copies(diamond(), g)};
}

}  // namespace

TEST(Patterns, KnownGraphs) {
    EXPECT_EQ(count_patterns(diamond()), (PatternCounts{5, 2, 1, 0, 1}));
    EXPECT_EQ(count_patterns(Graph::complete(4)), (PatternCounts{6, 4, 3, 1, 6}));
    EXPECT_EQ(count_patterns(Graph::cycle(4)), (PatternCounts{4, 0, 1, 0, 0}));
    EXPECT_EQ(count_patterns(Graph::path(2)), (PatternCounts{1, 0, 0, 0, 0}));
}

TEST(Patterns, MatchEmbeddingCounts) {
    for (const auto& g : small_graphs(6)) ASSERT_EQ(count_patterns(g), by_embedding(g));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 7 + i % 2, 0.5);
        ASSERT_EQ(count_patterns(g), by_embedding(g));
        ASSERT_EQ(count_patterns(g), naive_patterns(g));
    }
}

TEST(LeadingCoefficients, Examples) {
    EXPECT_EQ(leading_coefficients(diamond()), (std::vector<Integer>{1, -5, 8, -4}));
    EXPECT_EQ(leading_coefficients(Graph::complete(4)), (std::vector<Integer>{1, -6, 11, -6}));
    EXPECT_EQ(leading_coefficients(Graph::cycle(4)), (std::vector<Integer>{1, -4, 6, -3}));
    EXPECT_EQ(leading_coefficients(Graph::path(2)), (std::vector<Integer>{1, -1, 0}));
    EXPECT_EQ(leading_coefficients(Graph::edgeless(1)), (std::vector<Integer>{1, 0}));
}

TEST(LeadingCoefficients, MatchExpansion) {
    for (const auto& g : small_graphs(6)) {
        auto f = leading_coefficients(g);
        ASSERT_EQ(f, top_coefficients(chromatic(g), f.size()));
    }
    std::mt19937_64 rng(32);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 7 + i % 2, 0.5);
        auto f = leading_coefficients(g);
        ASSERT_EQ(f, top_coefficients(chromatic(g), 4));
    }
}

TEST(LeadingCoefficients, TopCoefficients) {
    Poly p{0, -4, 8, -5, 1};
    EXPECT_EQ(top_coefficients(p, 2), (std::vector<Integer>{1, -5}));
    EXPECT_EQ(top_coefficients(p, 9).size(), 5u);
    EXPECT_TRUE(top_coefficients(Poly(), 3).empty());
}
