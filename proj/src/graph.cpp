#include "chromatica/graph.hpp"

#include "chromatica/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace chromatica {

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> sorted_unique_edges, bool)
    : edges_(std::move(sorted_unique_edges)), adj_(n) {
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> es(edges.begin(), edges.end());
    for (const auto& e : es) {
        if (e.u == e.v) fail(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(e.u));
        if (e.v >= n) fail(ErrorCode::InvalidEdge, "edge " + edge_str(e) + " out of range for n=" + std::to_string(n));
    }
    std::sort(es.begin(), es.end());
    if (auto it = std::adjacent_find(es.begin(), es.end()); it != es.end())
        fail(ErrorCode::InvalidEdge, "duplicate edge " + edge_str(*it));
    *this = Graph(n, std::move(es), true);
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::edgeless(std::size_t n) { return Graph(n, std::vector<Edge>{}, true); }

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es), true);
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) fail(ErrorCode::Domain, "cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, es);
}

Graph Graph::path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es), true);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= adj_.size() || b >= adj_.size()) return false;
    const auto& na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex other = (&na == &adj_[a]) ? b : a;
    return std::binary_search(na.begin(), na.end(), other);
}

Graph Graph::with_edge(const Edge& e) const {
    if (e.u == e.v) fail(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count()) fail(ErrorCode::InvalidEdge, "edge " + edge_str(e) + " out of range");
    if (has_edge(e)) fail(ErrorCode::InvalidEdge, "edge " + edge_str(e) + " already present");
    std::vector<Edge> es = edges_;
    es.insert(std::lower_bound(es.begin(), es.end(), e), e);
    return Graph(vertex_count(), std::move(es), true);
}

Subgraph Subgraph::make(const Graph& g, std::vector<Vertex> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices)
        if (v >= g.vertex_count()) fail(ErrorCode::InvalidArgument, "subgraph vertex " + std::to_string(v) + " out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges) {
        if (!g.has_edge(e)) fail(ErrorCode::EdgeAbsent, "subgraph edge " + edge_str(e) + " not in parent graph");
        if (!std::binary_search(vertices.begin(), vertices.end(), e.u) ||
            !std::binary_search(vertices.begin(), vertices.end(), e.v))
            fail(ErrorCode::InvalidArgument, "subgraph edge " + edge_str(e) + " leaves the vertex set");
    }
    return Subgraph{std::move(vertices), std::move(edges)};
}

bool Subgraph::contains_vertex(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

bool Subgraph::contains_edge(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

Graph Subgraph::as_graph() const {
    std::vector<Edge> es;
    es.reserve(edges.size());
    auto index = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (const auto& e : edges) es.emplace_back(index(e.u), index(e.v));
    return Graph(vertices.size(), es);
}

Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e)) fail(ErrorCode::EdgeAbsent, "cannot delete absent edge " + edge_str(e));
    std::vector<Edge> es;
    es.reserve(g.edge_count() - 1);
    for (const auto& f : g.edges())
        if (f != e) es.push_back(f);
    return Graph(g.vertex_count(), es);
}

Graph contract_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e)) fail(ErrorCode::EdgeAbsent, "cannot contract absent edge " + edge_str(e));
    auto image = [&](Vertex x) -> Vertex {
        if (x == e.v) return e.u;
        return x > e.v ? x - 1 : x;
    };
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const auto& f : g.edges()) {
        Vertex a = image(f.u), b = image(f.v);
        if (a != b) es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(g.vertex_count() - 1, es);
}

std::vector<std::size_t> component_labels(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (label[y] == unset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

std::size_t component_count(const Graph& g) {
    auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Component> connected_components(const Graph& g) {
    auto labels = component_labels(g);
    std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Vertex>> members(count);
    std::vector<Vertex> local(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        local[v] = static_cast<Vertex>(members[labels[v]].size());
        members[labels[v]].push_back(v);
    }
    std::vector<std::vector<Edge>> edges(count);
    for (const auto& e : g.edges()) edges[labels[e.u]].emplace_back(local[e.u], local[e.v]);
    std::vector<Component> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t sz = members[c].size();
        out.push_back(Component{std::move(members[c]), Graph(sz, edges[c])});
    }
    return out;
}

namespace {

// Iterative lowpoint DFS shared by cut_vertices and bridges.
struct Lowpoint {
    std::vector<bool> cut;
    std::vector<Edge> bridges;
};

Lowpoint lowpoint_scan(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unseen), low(n, 0);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> next_child(n, 0);
    Lowpoint out{std::vector<bool>(n, false), {}};
    std::size_t clock = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unseen) continue;
        std::size_t root_children = 0;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = clock++;
        parent[root] = root;
        while (!stack.empty()) {
            Vertex x = stack.back();
            const auto& nb = g.neighbors(x);
            if (next_child[x] < nb.size()) {
                Vertex y = nb[next_child[x]++];
                if (disc[y] == unseen) {
                    parent[y] = x;
                    disc[y] = low[y] = clock++;
                    if (x == root) ++root_children;
                    stack.push_back(y);
                } else if (y != parent[x]) {
                    low[x] = std::min(low[x], disc[y]);
                }
                continue;
            }
            stack.pop_back();
            if (x == root) continue;
            Vertex p = parent[x];
            low[p] = std::min(low[p], low[x]);
            if (low[x] > disc[p]) out.bridges.emplace_back(p, x);
            if (p != root && low[x] >= disc[p]) out.cut[p] = true;
        }
        if (root_children >= 2) out.cut[root] = true;
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g) {
    auto scan = lowpoint_scan(g);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (scan.cut[v]) out.push_back(v);
    return out;
}

std::vector<Edge> bridges(const Graph& g) { return lowpoint_scan(g).bridges; }

Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : vertices) {
        if (v >= g.vertex_count()) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (in[e.u] && in[e.v]) es.push_back(e);
    return Subgraph{std::move(vertices), std::move(es)};
}

bool is_path_intersecting(const Graph& g, const Subgraph& h) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> in_h(n, false);
    for (Vertex v : h.vertices) in_h[v] = true;

    std::vector<char> seen(n);
    std::vector<Vertex> stack;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < h.vertices.size(); ++j) {
            Vertex a = h.vertices[i], b = h.vertices[j];
            if (h.contains_edge(Edge(a, b))) continue;
            // Search a -> b avoiding V_H \ {a,b} and E_H.
            std::fill(seen.begin(), seen.end(), 0);
            seen[a] = 1;
            stack.assign(1, a);
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbors(x)) {
                    if (seen[y]) continue;
                    if (h.contains_edge(Edge(x, y))) continue;
                    if (y == b) return false;
                    if (in_h[y]) continue;
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return true;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b) {
    const std::size_t n = g.vertex_count();
    if (a >= n || b >= n) fail(ErrorCode::InvalidArgument, "path endpoint out of range");
    std::vector<Vertex> prev(n, static_cast<Vertex>(-1));
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{a};
    seen[a] = true;
    while (!queue.empty() && !seen[b]) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = true;
            prev[y] = x;
            queue.push_back(y);
        }
    }
    if (!seen[b]) return {};
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> spanning_forest(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<Edge> out;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (seen[y]) continue;
                seen[y] = true;
                out.emplace_back(x, y);
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> edge_triangle_counts(const Graph& g) {
    std::vector<std::size_t> out;
    out.reserve(g.edge_count());
    std::vector<Vertex> common;
    for (const auto& e : g.edges()) {
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        common.clear();
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        out.push_back(common.size());
    }
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.vertex_count()) fail(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (Vertex p : perm) {
        if (p >= perm.size() || hit[p]) fail(ErrorCode::InvalidArgument, "not a permutation");
        hit[p] = true;
    }
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const auto& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (const auto& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
    return Graph(a.vertex_count() + b.vertex_count(), es);
}

}  // namespace chromatica
