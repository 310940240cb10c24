#include "chromatica/os_coefficients.hpp"

#include <algorithm>

namespace chromatica {

PatternCounts count_patterns(const Graph& g) {
    PatternCounts out;
    out.m = g.edge_count();
    const auto n = static_cast<Vertex>(g.vertex_count());

    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++out.k3;

    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), ad = g.has_edge(a, d);
                    const bool bc = g.has_edge(b, c), bd = g.has_edge(b, d), cd = g.has_edge(c, d);
                    const int present = ab + ac + ad + bc + bd + cd;
                    if (present < 4) continue;
                    // The three Hamiltonian cycles on {a,b,c,d}.
                    out.c4 += (ab && bc && cd && ad) + (ab && bd && cd && ac) + (ac && bc && bd && ad);
                    if (present == 6) {
                        ++out.k4;
                        out.g0 += 6;  // drop any one of the six edges
                    } else if (present == 5) {
                        ++out.g0;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Integer> leading_coefficients(const PatternCounts& p, std::size_t n) {
    const Integer m = static_cast<unsigned long>(p.m);
    const Integer k3 = static_cast<unsigned long>(p.k3);
    const Integer c4 = static_cast<unsigned long>(p.c4);
    const Integer k4 = static_cast<unsigned long>(p.k4);
    const Integer g0 = static_cast<unsigned long>(p.g0);
    Integer m2, m3;
    mpz_bin_ui(m2.get_mpz_t(), m.get_mpz_t(), 2);
    mpz_bin_ui(m3.get_mpz_t(), m.get_mpz_t(), 3);

    std::vector<Integer> all{1, -m, m2 - k3, -(m3 - (m - 2) * k3 - c4 - k4 + g0)};
    all.resize(std::min<std::size_t>(4, n + 1));
    return all;
}

std::vector<Integer> leading_coefficients(const Graph& g) {
    return leading_coefficients(count_patterns(g), g.vertex_count());
}

std::vector<Integer> top_coefficients(const Poly& chi, std::size_t count) {
    std::vector<Integer> out;
    const long d = chi.degree();
    for (std::size_t i = 0; i < count && static_cast<long>(i) <= d; ++i)
        out.push_back(chi.coeff(static_cast<std::size_t>(d) - i));
    return out;
}

}  // namespace chromatica
