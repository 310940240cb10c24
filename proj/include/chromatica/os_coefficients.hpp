#pragma once

#include "chromatica/graph.hpp"
#include "chromatica/poly.hpp"

#include <cstdint>
#include <vector>

namespace chromatica {

/// Counts of (not necessarily induced) subgraphs isomorphic to K3, C4, K4 and
/// the diamond K4 - e, plus the edge count m.
struct PatternCounts {
    std::uint64_t m = 0;
    std::uint64_t k3 = 0;
    std::uint64_t c4 = 0;
    std::uint64_t k4 = 0;
    std::uint64_t g0 = 0;

    friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

/// Enumerates 3- and 4-vertex subsets.
PatternCounts count_patterns(const Graph& g);

/// Coefficients of t^n, t^(n-1), t^(n-2), t^(n-3) from the pattern counts:
///   1, -m, C(m,2) - k3, -[C(m,3) - (m-2) k3 - c4 - k4 + g0].
/// Graphs with n < 3 get the min(4, n+1) entries that exist.
std::vector<Integer> leading_coefficients(const Graph& g);
std::vector<Integer> leading_coefficients(const PatternCounts& counts, std::size_t n);

/// Top min(4, n+1) coefficients of chi, highest power first.
std::vector<Integer> top_coefficients(const Poly& chi, std::size_t count);

}  // namespace chromatica
