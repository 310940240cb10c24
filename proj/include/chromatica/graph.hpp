#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromatica {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// structural operation returns a new value.
class Graph {
public:
    Graph() = default;
    /// Throws InvalidEdge on loops, out-of-range endpoints or duplicates.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    static Graph edgeless(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    /// Graph with one more edge. Throws InvalidEdge if e is a loop, out of
    /// range or already present.
    Graph with_edge(const Edge& e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

private:
    Graph(std::size_t n, std::vector<Edge> sorted_unique_edges, bool);

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// A subgraph of some parent graph, expressed in the parent's labels. Edge
/// closure under the vertex set is not required.
struct Subgraph {
    std::vector<Vertex> vertices;  // sorted, unique
    std::vector<Edge> edges;       // sorted, unique, endpoints in vertices

    /// Validates against the parent: vertices in range, edges present in G
    /// with both endpoints in the vertex set.
    static Subgraph make(const Graph& g, std::vector<Vertex> vertices, std::vector<Edge> edges);

    bool contains_vertex(Vertex v) const;
    bool contains_edge(const Edge& e) const;
    /// H relabeled onto 0..|V_H|-1 preserving vertex order.
    Graph as_graph() const;
};

Graph delete_edge(const Graph& g, const Edge& e);

/// Merges e.v into e.u (u < v), drops the loop, collapses parallel edges, and
/// shifts every vertex above v down by one.
Graph contract_edge(const Graph& g, const Edge& e);

struct Component {
    std::vector<Vertex> vertices;  // sorted, in parent labels
    Graph graph;                   // induced, relabeled in vertex order
};

/// Components ordered by their smallest vertex.
std::vector<Component> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);
/// Component index per vertex, indices assigned by smallest vertex.
std::vector<std::size_t> component_labels(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);

/// True iff no pair of H-vertices non-adjacent in H is joined by a path of G
/// that avoids E_H and meets V_H only at its ends.
bool is_path_intersecting(const Graph& g, const Subgraph& h);

/// Some shortest a-b path as a vertex sequence; empty if disconnected.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b);

/// Breadth-first spanning forest, each tree rooted at its lowest vertex.
std::vector<Edge> spanning_forest(const Graph& g);

/// Number of triangles through each edge, aligned with g.edges().
std::vector<std::size_t> edge_triangle_counts(const Graph& g);

Graph relabel(const Graph& g, std::span<const Vertex> perm);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Isomorphism-complete key: equal iff the graphs are isomorphic.
struct CanonKey {
    std::string bytes;
    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept;
};

CanonKey canonical_key(const Graph& g);

/// Same key as canonical_key, or nullopt if the search exceeds leaf_budget
/// discrete leaves.
std::optional<CanonKey> try_canonical_key(const Graph& g, std::size_t leaf_budget);

}  // namespace chromatica
