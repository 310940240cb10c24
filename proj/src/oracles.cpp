#include "chromatica/oracles.hpp"

#include "chromatica/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

namespace chromatica::oracles {

namespace {

// Union-find with undo, for walking the edge-subset tree.
class RollbackDsu {
public:
    explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns the absorbed root, or npos when already joined.
    std::size_t unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return npos;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return b;
    }

    void undo(std::size_t absorbed) {
        std::size_t root = parent_[absorbed];
        size_[root] -= size_[absorbed];
        parent_[absorbed] = absorbed;
        ++components_;
    }

    std::size_t components() const noexcept { return components_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

void whitney_walk(const std::vector<Edge>& edges, std::size_t i, bool odd, RollbackDsu& dsu,
                  std::vector<std::int64_t>& signed_counts) {
    if (i == edges.size()) {
        signed_counts[dsu.components()] += odd ? -1 : 1;
        return;
    }
    whitney_walk(edges, i + 1, odd, dsu, signed_counts);
    std::size_t absorbed = dsu.unite(edges[i].u, edges[i].v);
    whitney_walk(edges, i + 1, !odd, dsu, signed_counts);
    if (absorbed != RollbackDsu::npos) dsu.undo(absorbed);
}

void check_space(long base, std::size_t n, const char* what) {
    if (base <= 1) return;
    if (static_cast<double>(n) * std::log(static_cast<double>(base)) > std::log(kMaxEnumeration))
        fail(ErrorCode::TooLarge, std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(n) +
                                      " exceeds the enumeration limit");
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Poly whitney_chromatic(const Graph& g) {
    if (g.edge_count() > kWhitneyMaxEdges)
        fail(ErrorCode::TooLarge, "Whitney expansion limited to " + std::to_string(kWhitneyMaxEdges) + " edges");
    RollbackDsu dsu(g.vertex_count());
    std::vector<std::int64_t> signed_counts(g.vertex_count() + 1, 0);
    whitney_walk(g.edges(), 0, false, dsu, signed_counts);
    std::vector<Integer> coeffs;
    coeffs.reserve(signed_counts.size());
    for (auto c : signed_counts) coeffs.emplace_back(static_cast<long>(c));
    return Poly(std::move(coeffs));
}

Integer coloring_count(const Graph& g, long k) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative number of colors");
    const std::size_t n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;
    check_space(k, n, "coloring count");

    std::vector<long> color(n, -1);
    std::uint64_t count = 0;
    std::size_t v = 0;
    // Iterative backtracking: color[v] advances until it clashes with no
    // lower-labelled neighbour.
    while (true) {
        ++color[v];
        if (color[v] == k) {
            color[v] = -1;
            if (v == 0) break;
            --v;
            continue;
        }
        bool ok = true;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            if (w < v && color[w] == color[v]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (v + 1 == n) {
            ++count;
        } else {
            ++v;
        }
    }
    return Integer(static_cast<unsigned long>(count));
}

Integer fp_point_count(const Graph& g, long p) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const std::size_t n = g.vertex_count();
    if (n == 0) return 1;
    check_space(p, n, "F_p point count");

    // Odometer over F_p^n, most significant coordinate first. On the first
    // coordinate i lying on a hyperplane x_j - x_i = 0 with j < i, every point
    // sharing the prefix x_0..x_i is skipped at once.
    std::vector<long> x(n, 0);
    std::uint64_t count = 0;
    while (true) {
        std::size_t bad = n;
        for (std::size_t i = 0; i < n && bad == n; ++i) {
            for (Vertex j : g.neighbors(static_cast<Vertex>(i))) {
                if (j < i && (x[j] - x[i]) % p == 0) {
                    bad = i;
                    break;
                }
            }
        }
        std::size_t pos;
        if (bad == n) {
            ++count;
            pos = n - 1;
        } else {
            pos = bad;
            for (std::size_t i = bad + 1; i < n; ++i) x[i] = 0;
        }
        // increment at pos with carry
        while (true) {
            if (++x[pos] < p) break;
            x[pos] = 0;
            if (pos == 0) return Integer(static_cast<unsigned long>(count));
            --pos;
        }
    }
}

bool BondLattice::below_or_equal(const Element& x, const Element& y) {
    return std::all_of(x.blocks.begin(), x.blocks.end(), [&](std::uint32_t b) {
        return std::any_of(y.blocks.begin(), y.blocks.end(), [&](std::uint32_t c) { return (b & ~c) == 0; });
    });
}

namespace {

struct SubsetTables {
    std::vector<bool> connected;
    std::vector<Integer> mu;
};

SubsetTables subset_tables(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& e : g.edges()) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    SubsetTables t;
    t.connected.assign(std::size_t{full} + 1, false);
    t.mu.assign(std::size_t{full} + 1, 0);
    std::vector<Integer> f(std::size_t{full} + 1, 0);  // signed sum over connected partitions
    f[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t low = s & (~s + 1);
        std::uint32_t reach = low, frontier = low;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t b = frontier; b; b &= b - 1) next |= nbr[std::countr_zero(b)];
            next &= s & ~reach;
            reach |= next;
            frontier = next;
        }
        t.connected[s] = reach == s;

        // Blocks containing the lowest vertex of s, proper subsets only.
        Integer rest = 0;
        std::uint32_t others = s & ~low;
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            std::uint32_t block = sub | low;
            if (block != s && t.connected[block]) rest += t.mu[block] * f[s & ~block];
            if (sub == 0) break;
        }
        if (t.connected[s]) t.mu[s] = (s == low) ? Integer(1) : Integer(-rest);
        f[s] = rest + (t.connected[s] ? t.mu[s] : Integer(0));
        if (s == full) break;
    }
    return t;
}

void enumerate_partitions(std::uint32_t remaining, const SubsetTables& t, std::vector<std::uint32_t>& blocks,
                          std::vector<BondLattice::Element>& out, std::size_t n) {
    if (remaining == 0) {
        BondLattice::Element e;
        e.blocks = blocks;
        std::sort(e.blocks.begin(), e.blocks.end());
        e.mu = 1;
        for (auto b : e.blocks) e.mu *= t.mu[b];
        e.dim = e.blocks.size();
        e.rank = n - e.dim;
        out.push_back(std::move(e));
        return;
    }
    std::uint32_t low = remaining & (~remaining + 1);
    std::uint32_t others = remaining & ~low;
    for (std::uint32_t sub = 0;; sub = (sub - others) & others) {
        std::uint32_t block = sub | low;
        if (t.connected[block]) {
            blocks.push_back(block);
            enumerate_partitions(remaining & ~block, t, blocks, out, n);
            blocks.pop_back();
        }
        if (sub == others) break;
    }
}

}  // namespace

BondLattice bond_lattice(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kLatticeMaxVertices)
        fail(ErrorCode::TooLarge, "bond lattice limited to " + std::to_string(kLatticeMaxVertices) + " vertices");
    BondLattice lattice;
    lattice.n = n;
    if (n == 0) {
        lattice.elements.push_back({{}, 1, 0, 0});
        return lattice;
    }
    auto tables = subset_tables(g);
    std::vector<std::uint32_t> blocks;
    enumerate_partitions((1u << n) - 1, tables, blocks, lattice.elements, n);
    // Bottom first, then by rank.
    std::stable_sort(lattice.elements.begin(), lattice.elements.end(),
                     [](const auto& a, const auto& b) { return a.rank < b.rank; });
    return lattice;
}

Poly bond_lattice_characteristic(const Graph& g) {
    BondLattice lattice = bond_lattice(g);
    std::vector<Integer> coeffs(lattice.n + 1, 0);
    for (const auto& e : lattice.elements) coeffs[e.dim] += e.mu;
    return Poly(std::move(coeffs));
}

namespace {

std::map<ProjPoint, std::size_t> point_multiplicities(const std::vector<ProjLine>& lines) {
    std::map<ProjPoint, std::set<std::size_t>> through;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto& s = through[meet(lines[i], lines[j])];
            s.insert(i);
            s.insert(j);
        }
    }
    std::map<ProjPoint, std::size_t> out;
    for (auto& [p, s] : through) out.emplace(p, s.size());
    return out;
}

void check_distinct(const std::vector<ProjLine>& lines) {
    std::set<ProjLine> seen(lines.begin(), lines.end());
    if (seen.size() != lines.size()) fail(ErrorCode::LineAlreadyPresent, "repeated line");
}

}  // namespace

Poly lines_lattice_characteristic(const std::vector<ProjLine>& lines) {
    check_distinct(lines);
    const long m = static_cast<long>(lines.size());
    // Whole space: mu = 1, dim 3. Each plane: mu = -1, dim 2.
    Poly chi{0, 0, -m, 1};
    if (m <= 1) return chi;
    auto points = point_multiplicities(lines);
    // Line through a point of multiplicity r: mu = -(1 - r) = r - 1, dim 1.
    Integer line_mu_sum = 0;
    for (const auto& [p, r] : points) line_mu_sum += static_cast<unsigned long>(r - 1);
    chi += Poly::monomial(line_mu_sum, 1);
    if (points.size() == 1) return chi;  // pencil: rank 2, no origin element
    // Origin: mu = -(sum of everything below).
    chi += Poly::constant(-(Integer(1) - m + line_mu_sum));
    return chi;
}

Integer sphere_chamber_count(const std::vector<ProjLine>& lines) {
    check_distinct(lines);
    const std::size_t m = lines.size();
    if (m == 0) return 1;
    if (m == 1) return 2;
    auto points = point_multiplicities(lines);
    if (points.size() == 1) return Integer(static_cast<unsigned long>(2 * m));
    // Each projective point gives two antipodal vertices. A great circle
    // through k points is cut into 2k arcs, and summing k over lines is the
    // same as summing multiplicities over points.
    Integer vertices = static_cast<unsigned long>(2 * points.size());
    Integer edges = 0;
    for (const auto& [p, r] : points) edges += static_cast<unsigned long>(2 * r);
    return edges - vertices + 2;
}

}  // namespace chromatica::oracles
