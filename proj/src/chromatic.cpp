#include "chromatica/chromatic.hpp"

#include "chromatica/error.hpp"

#include <algorithm>

namespace chromatica {

namespace {

const Poly kT{0, 1};
const Poly kTMinus1{-1, 1};

}  // namespace

Poly closed_form(ClosedFormFamily family) {
    const std::size_t n = family.n;
    switch (family.kind) {
        case GraphFamily::Tree:
            if (n < 1) fail(ErrorCode::Domain, "tree needs n >= 1");
            return kT * kTMinus1.pow(static_cast<unsigned>(n - 1));
        case GraphFamily::Complete: {
            if (n < 2) fail(ErrorCode::Domain, "complete graph family needs n >= 2");
            Poly p = Poly::constant(1);
            for (std::size_t i = 0; i < n; ++i) p *= Poly::linear_root(static_cast<long>(i));
            return p;
        }
        case GraphFamily::Cycle: {
            if (n < 3) fail(ErrorCode::Domain, "cycle needs n >= 3");
            Poly sum;
            for (std::size_t i = 0; i + 2 <= n; ++i) {
                Poly term = kTMinus1.pow(static_cast<unsigned>(n - 2 - i));
                if (i % 2) sum -= term;
                else sum += term;
            }
            return kT * kTMinus1 * sum;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown graph family");
}

Poly forest_polynomial(std::size_t n, std::size_t components) {
    if (components > n) fail(ErrorCode::InvalidArgument, "more components than vertices");
    return kT.pow(static_cast<unsigned>(components)) * kTMinus1.pow(static_cast<unsigned>(n - components));
}

const char* to_string(EdgeAdditionRule::Kind kind) noexcept {
    switch (kind) {
        case EdgeAdditionRule::Kind::Bridge: return "Bridge";
        case EdgeAdditionRule::Kind::MinimalCycle: return "MinimalCycle";
        case EdgeAdditionRule::Kind::Fallback: return "Fallback";
    }
    return "?";
}

ComputationTrace& ComputationTrace::operator+=(const ComputationTrace& o) {
    recursion_nodes += o.recursion_nodes;
    memo_hits += o.memo_hits;
    bridge_rules += o.bridge_rules;
    minimal_cycle_rules += o.minimal_cycle_rules;
    fallback_rules += o.fallback_rules;
    return *this;
}

std::optional<ClosedFormFamily> detect_family(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (n == 0 || component_count(g) != 1) return std::nullopt;
    if (m + 1 == n) return ClosedFormFamily{GraphFamily::Tree, n};
    if (n >= 2 && m == n * (n - 1) / 2) return ClosedFormFamily{GraphFamily::Complete, n};
    if (n >= 3 && m == n) {
        bool two_regular = true;
        for (Vertex v = 0; v < n && two_regular; ++v) two_regular = g.degree(v) == 2;
        if (two_regular) return ClosedFormFamily{GraphFamily::Cycle, n};
    }
    return std::nullopt;
}

ChromaticEngine::ChromaticEngine(EngineOptions options) : options_(options) {}

std::size_t ChromaticEngine::memo_size() const {
    std::lock_guard lock(memo_mutex_);
    return memo_.size();
}

void ChromaticEngine::clear_memo() {
    std::lock_guard lock(memo_mutex_);
    memo_.clear();
}

Poly ChromaticEngine::chromatic(const Graph& g, ComputationTrace* trace) {
    ComputationTrace local;
    Poly p = recurse(g, local);
    if (trace) *trace += local;
    return p;
}

Poly ChromaticEngine::recurse(const Graph& g, ComputationTrace& trace) {
    ++trace.recursion_nodes;
    if (options_.node_limit && trace.recursion_nodes > options_.node_limit)
        fail(ErrorCode::TooLarge, "deletion-contraction exceeded " + std::to_string(options_.node_limit) + " recursion nodes");
    if (g.vertex_count() == 0) return Poly::constant(1);
    if (g.edge_count() == 0) return Poly::monomial(1, g.vertex_count());

    auto comps = connected_components(g);
    if (comps.size() == 1) return connected(g, trace);
    Poly p = Poly::constant(1);
    for (const auto& c : comps) p *= connected(c.graph, trace);
    return p;
}

Poly ChromaticEngine::connected(const Graph& g, ComputationTrace& trace) {
    if (auto family = detect_family(g)) return closed_form(*family);

    std::optional<CanonKey> key;
    if (options_.memoize && g.vertex_count() <= options_.memo_max_vertices) {
        key = try_canonical_key(g, options_.canon_leaf_budget);
        if (key) {
            std::lock_guard lock(memo_mutex_);
            if (auto it = memo_.find(*key); it != memo_.end()) {
                ++trace.memo_hits;
                return it->second;
            }
        }
    }

    auto triangles = edge_triangle_counts(g);
    auto best = std::max_element(triangles.begin(), triangles.end()) - triangles.begin();
    const Edge e = g.edges()[static_cast<std::size_t>(best)];
    Poly p = recurse(delete_edge(g, e), trace) - recurse(contract_edge(g, e), trace);

    if (key) {
        std::lock_guard lock(memo_mutex_);
        memo_.emplace(std::move(*key), p);
    }
    return p;
}

Poly chromatic(const Graph& g, ComputationTrace* trace) {
    ChromaticEngine engine;
    return engine.chromatic(g, trace);
}

Graph subgraph_sum(const Graph& g1, std::span<const Vertex> s1, const Graph& g2, std::span<const Vertex> s2) {
    if (s1.size() != s2.size()) fail(ErrorCode::NotIsomorphicUnderMap, "gluing lists differ in length");
    const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
    auto distinct_in_range = [](std::span<const Vertex> s, std::size_t n) {
        std::vector<Vertex> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end() && (v.empty() || v.back() < n);
    };
    if (!distinct_in_range(s1, n1) || !distinct_in_range(s2, n2))
        fail(ErrorCode::NotIsomorphicUnderMap, "gluing vertices must be distinct and in range");
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = i + 1; j < s1.size(); ++j)
            if (g1.has_edge(s1[i], s1[j]) != g2.has_edge(s2[i], s2[j]))
                fail(ErrorCode::NotIsomorphicUnderMap, "vertex correspondence is not an induced-subgraph isomorphism");

    constexpr Vertex unmapped = static_cast<Vertex>(-1);
    std::vector<Vertex> image(n2, unmapped);
    for (std::size_t i = 0; i < s2.size(); ++i) image[s2[i]] = s1[i];
    auto next = static_cast<Vertex>(n1);
    for (Vertex w = 0; w < n2; ++w)
        if (image[w] == unmapped) image[w] = next++;

    std::vector<Edge> es = g1.edges();
    for (const auto& e : g2.edges()) {
        Edge f(image[e.u], image[e.v]);
        if (!g1.has_edge(f)) es.push_back(f);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(next, es);
}

Poly chromatic_of_sum(const Graph& g1, const Subgraph& h1, const Graph& g2, const Subgraph& h2,
                      std::span<const std::pair<Vertex, Vertex>> map) {
    if (map.size() != h1.vertices.size() || map.size() != h2.vertices.size())
        fail(ErrorCode::NotIsomorphicUnderMap, "map must be a bijection between the subgraph vertex sets");
    std::vector<Vertex> s1, s2;
    for (const auto& [a, b] : map) {
        if (!h1.contains_vertex(a) || !h2.contains_vertex(b))
            fail(ErrorCode::NotIsomorphicUnderMap, "map pairs a vertex outside the subgraphs");
        s1.push_back(a);
        s2.push_back(b);
    }
    {
        auto a = s1, b = s2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
            fail(ErrorCode::NotIsomorphicUnderMap, "map is not injective");
    }
    if (h1.edges.size() != h2.edges.size())
        fail(ErrorCode::NotIsomorphicUnderMap, "subgraphs have different edge counts");
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = i + 1; j < s1.size(); ++j)
            if (h1.contains_edge(Edge(s1[i], s1[j])) != h2.contains_edge(Edge(s2[i], s2[j])))
                fail(ErrorCode::NotIsomorphicUnderMap, "map does not carry E(H1) onto E(H2)");

    if (!is_path_intersecting(g1, h1))
        fail(ErrorCode::HypothesisViolated, "gluing subgraph is not path-intersecting in the first graph");
    if (!is_path_intersecting(g2, h2))
        fail(ErrorCode::HypothesisViolated, "gluing subgraph is not path-intersecting in the second graph");

    ChromaticEngine engine;
    return exact_div(engine.chromatic(g1) * engine.chromatic(g2), engine.chromatic(h1.as_graph()));
}

namespace {

void check_new_edge(const Graph& g, const Edge& e0) {
    if (e0.u == e0.v) fail(ErrorCode::InvalidEdge, "new edge is a loop");
    if (e0.v >= g.vertex_count()) fail(ErrorCode::InvalidEdge, "new edge endpoint out of range");
    if (g.has_edge(e0)) fail(ErrorCode::InvalidEdge, "edge already present");
}

Subgraph path_subgraph(const std::vector<Vertex>& path) {
    Subgraph s;
    s.vertices = path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) s.edges.emplace_back(path[i], path[i + 1]);
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

}  // namespace

EdgeAdditionRule classify_edge_addition(const Graph& g, const Edge& e0) {
    check_new_edge(g, e0);
    auto labels = component_labels(g);
    if (labels[e0.u] != labels[e0.v]) return {EdgeAdditionRule::Kind::Bridge, 0};

    auto path = shortest_path(g, e0.u, e0.v);
    Subgraph p = path_subgraph(path);
    if (!is_path_intersecting(g, p)) return {EdgeAdditionRule::Kind::Fallback, 0};

    Subgraph cycle = p;
    cycle.edges.insert(std::lower_bound(cycle.edges.begin(), cycle.edges.end(), e0), e0);
    if (!is_path_intersecting(g.with_edge(e0), cycle))
        fail(ErrorCode::Internal, "minimal cycle through the new edge is not path-intersecting");
    return {EdgeAdditionRule::Kind::MinimalCycle, path.size()};
}

Extension extend_by_edge(const Graph& g, const Poly& chi_g, const Edge& e0, ChromaticEngine* engine) {
    ChromaticEngine local;
    ChromaticEngine& eng = engine ? *engine : local;
#ifndef NDEBUG
    if (eng.chromatic(g) != chi_g) fail(ErrorCode::InvalidArgument, "supplied polynomial is not chi(G)");
#endif
    EdgeAdditionRule rule = classify_edge_addition(g, e0);
    Graph next = g.with_edge(e0);
    switch (rule.kind) {
        case EdgeAdditionRule::Kind::Bridge:
            return {std::move(next), exact_div(chi_g * kTMinus1, kT), rule};
        case EdgeAdditionRule::Kind::MinimalCycle: {
            const std::size_t m = rule.cycle_length;
            Poly denom = kT * kTMinus1.pow(static_cast<unsigned>(m - 1));
            return {std::move(next), exact_div(chi_g * closed_form({GraphFamily::Cycle, m}), denom), rule};
        }
        case EdgeAdditionRule::Kind::Fallback:
            break;
    }
    Poly chi = eng.chromatic(next);
    return {std::move(next), std::move(chi), rule};
}

}  // namespace chromatica
