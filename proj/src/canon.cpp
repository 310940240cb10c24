// Canonical labeling by colour refinement plus exhaustive individualization.
// The key is the lexicographically smallest adjacency encoding over every
// discrete ordered partition reachable from the refined degree partition, so
// it never merges non-isomorphic graphs and never splits isomorphic ones.

#include "chromatica/graph.hpp"

#include "chromatica/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace chromatica {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by the count of neighbours in every cell until stable. Sub-cells
// are ordered by their signature, which depends only on the ordered partition
// and the graph, never on vertex labels.
Cells refine(const Graph& g, Cells cells) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> cell_of(n);
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) cell_of[v] = c;

        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> sig;
            sig.reserve(cell.size());
            for (Vertex v : cell) {
                std::vector<std::uint32_t> counts(cells.size(), 0);
                for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            std::vector<Vertex> current{sig[0].second};
            for (std::size_t i = 1; i < sig.size(); ++i) {
                if (sig[i].first != sig[i - 1].first) {
                    next.push_back(std::move(current));
                    current.clear();
                }
                current.push_back(sig[i].second);
            }
            next.push_back(std::move(current));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

std::string encode(const Graph& g, const Cells& discrete) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& c : discrete) order.push_back(c.front());

    std::string out = std::to_string(n);
    out.push_back(':');
    unsigned char byte = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
            if (++filled == 8) {
                out.push_back(static_cast<char>(byte));
                byte = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(byte << (8 - filled)));
    return out;
}

struct Search {
    const Graph& g;
    std::size_t leaf_budget;
    std::size_t leaves = 0;
    bool exhausted = false;
    std::optional<std::string> best;

    void run(const Cells& cells) {
        if (exhausted) return;
        // First smallest non-singleton cell.
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        }
        if (target == cells.size()) {
            if (++leaves > leaf_budget) {
                exhausted = true;
                return;
            }
            std::string code = encode(g, cells);
            if (!best || code < *best) best = std::move(code);
            return;
        }
        for (Vertex v : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (Vertex w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            run(refine(g, std::move(child)));
            if (exhausted) return;
        }
    }
};

}  // namespace

std::size_t CanonKeyHash::operator()(const CanonKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }

std::optional<CanonKey> try_canonical_key(const Graph& g, std::size_t leaf_budget) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return CanonKey{"0:"};
    Cells initial(1);
    for (Vertex v = 0; v < n; ++v) initial[0].push_back(v);
    Search search{g, leaf_budget, 0, false, std::nullopt};
    search.run(refine(g, std::move(initial)));
    if (search.exhausted || !search.best) return std::nullopt;
    return CanonKey{std::move(*search.best)};
}

CanonKey canonical_key(const Graph& g) {
    auto key = try_canonical_key(g, static_cast<std::size_t>(-1));
    if (!key) fail(ErrorCode::Internal, "canonical labeling produced no leaf");
    return *key;
}

}  // namespace chromatica
