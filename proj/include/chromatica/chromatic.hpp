#pragma once

#include "chromatica/graph.hpp"
#include "chromatica/poly.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>

namespace chromatica {

enum class GraphFamily { Tree, Complete, Cycle };

struct ClosedFormFamily {
    GraphFamily kind;
    std::size_t n;
};

/// t(t-1)^(n-1), t(t-1)...(t-n+1), or t(t-1) sum_i (-1)^i (t-1)^(n-2-i).
/// Throws DomainError below n = 1, 2, 3 respectively.
Poly closed_form(ClosedFormFamily family);

/// t^c (t-1)^(n-c): any forest with c components on n vertices.
Poly forest_polynomial(std::size_t n, std::size_t components);

struct EdgeAdditionRule {
    enum class Kind { Bridge, MinimalCycle, Fallback };
    Kind kind = Kind::Fallback;
    std::size_t cycle_length = 0;  // m >= 3 for MinimalCycle, 0 otherwise

    friend bool operator==(const EdgeAdditionRule&, const EdgeAdditionRule&) = default;
};

const char* to_string(EdgeAdditionRule::Kind kind) noexcept;

struct ComputationTrace {
    std::uint64_t recursion_nodes = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t bridge_rules = 0;
    std::uint64_t minimal_cycle_rules = 0;
    std::uint64_t fallback_rules = 0;

    ComputationTrace& operator+=(const ComputationTrace& o);
};

struct EngineOptions {
    bool memoize = true;
    /// Recursion nodes with more vertices than this are never memoized.
    std::size_t memo_max_vertices = 12;
    /// Canonical-labeling leaves tried before a node is left unmemoized.
    std::size_t canon_leaf_budget = 2048;
    /// TooLarge once a single computation exceeds this many recursion nodes;
    /// 0 disables the limit.
    std::uint64_t node_limit = 0;
};

/// Deletion-contraction engine: component split, tree/complete/cycle base
/// cases, memoization on canonical keys, edge chosen in the most triangles.
/// A single engine may be shared between threads; the memo is locked.
class ChromaticEngine {
public:
    explicit ChromaticEngine(EngineOptions options = {});

    Poly chromatic(const Graph& g, ComputationTrace* trace = nullptr);

    const EngineOptions& options() const noexcept { return options_; }
    std::size_t memo_size() const;
    void clear_memo();

private:
    Poly recurse(const Graph& g, ComputationTrace& trace);
    Poly connected(const Graph& g, ComputationTrace& trace);

    EngineOptions options_;
    mutable std::mutex memo_mutex_;
    std::unordered_map<CanonKey, Poly, CanonKeyHash> memo_;
};

/// Chromatic polynomial with a default (memoizing) engine.
Poly chromatic(const Graph& g, ComputationTrace* trace = nullptr);

/// Tree/complete/cycle recognition for connected graphs.
std::optional<ClosedFormFamily> detect_family(const Graph& g);

/// Glues g2 onto g1 by identifying s2[i] with s1[i]. The glued graph keeps
/// g1's labels and appends g2's remaining vertices in increasing order.
/// Throws NotIsomorphicUnderMap unless s1[i] -> s2[i] is an isomorphism of the
/// induced subgraphs.
Graph subgraph_sum(const Graph& g1, std::span<const Vertex> s1, const Graph& g2, std::span<const Vertex> s2);

/// chi(G1 (+)_H G2) = chi(G1) chi(G2) / chi(H). `map` pairs each vertex of h1
/// with its image in h2. Throws HypothesisViolated unless h1 and h2 are
/// path-intersecting in their graphs, NotIsomorphicUnderMap unless the map
/// carries E(h1) onto E(h2).
Poly chromatic_of_sum(const Graph& g1, const Subgraph& h1, const Graph& g2, const Subgraph& h2,
                      std::span<const std::pair<Vertex, Vertex>> map);

/// Bridge if the endpoints lie in different components; MinimalCycle(m) if the
/// shortest endpoint path P (m vertices) is a path-intersecting subgraph of G,
/// so that P + e0 is the only cycle the new edge needs to account for;
/// Fallback otherwise. Throws InvalidEdge for loops or existing edges.
EdgeAdditionRule classify_edge_addition(const Graph& g, const Edge& e0);

struct Extension {
    Graph graph;
    Poly chi;
    EdgeAdditionRule rule;
};

/// G' = G + e0 with chi(G') from chi(G): Bridge multiplies by (t-1)/t,
/// MinimalCycle(m) by chi(C_m) / (t(t-1)^(m-1)), Fallback recomputes.
Extension extend_by_edge(const Graph& g, const Poly& chi_g, const Edge& e0, ChromaticEngine* engine = nullptr);

struct InductiveResult {
    Poly chi;
    ComputationTrace trace;
};

/// Spanning forest first, then edges that qualify as Bridge/MinimalCycle
/// (shortest cycle first); when none qualifies one edge is added by
/// deletion-contraction, whose contraction re-enters this procedure.
InductiveResult inductive_chromatic(const Graph& g);

}  // namespace chromatica
