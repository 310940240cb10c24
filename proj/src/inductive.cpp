#include "chromatica/chromatic.hpp"

#include "chromatica/error.hpp"

#include <algorithm>

namespace chromatica {

namespace {

void run(const Graph& g, Poly& chi_out, ComputationTrace& trace) {
    ++trace.recursion_nodes;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        chi_out = Poly::constant(1);
        return;
    }

    auto tree_edges = spanning_forest(g);
    Graph current(n, tree_edges);
    Poly chi = forest_polynomial(n, component_count(current));

    std::vector<Edge> remaining;
    std::set_difference(g.edges().begin(), g.edges().end(), tree_edges.begin(), tree_edges.end(),
                        std::back_inserter(remaining));

    const Poly t{0, 1};
    const Poly t_minus_1{-1, 1};
    while (!remaining.empty()) {
        // Qualifying edge with the shortest cycle; ties keep lexicographic order.
        std::size_t pick = remaining.size();
        EdgeAdditionRule pick_rule;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            EdgeAdditionRule rule = classify_edge_addition(current, remaining[i]);
            if (rule.kind == EdgeAdditionRule::Kind::Fallback) continue;
            if (pick == remaining.size() || rule.cycle_length < pick_rule.cycle_length) {
                pick = i;
                pick_rule = rule;
                if (rule.kind == EdgeAdditionRule::Kind::Bridge || rule.cycle_length == 3) break;
            }
        }

        if (pick < remaining.size()) {
            const Edge e = remaining[pick];
            if (pick_rule.kind == EdgeAdditionRule::Kind::Bridge) {
                chi = exact_div(chi * t_minus_1, t);
                ++trace.bridge_rules;
            } else {
                const std::size_t m = pick_rule.cycle_length;
                chi = exact_div(chi * closed_form({GraphFamily::Cycle, m}),
                                t * t_minus_1.pow(static_cast<unsigned>(m - 1)));
                ++trace.minimal_cycle_rules;
            }
            current = current.with_edge(e);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
            continue;
        }

        // chi(G + e) = chi(G) - chi((G + e) / e)
        const Edge e = remaining.front();
        Graph next = current.with_edge(e);
        Poly contracted;
        run(contract_edge(next, e), contracted, trace);
        chi -= contracted;
        ++trace.fallback_rules;
        current = std::move(next);
        remaining.erase(remaining.begin());
    }
    chi_out = std::move(chi);
}

}  // namespace

InductiveResult inductive_chromatic(const Graph& g) {
    InductiveResult out;
    run(g, out.chi, out.trace);
    return out;
}

}  // namespace chromatica
