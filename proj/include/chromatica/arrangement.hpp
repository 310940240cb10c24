#pragma once

#include "chromatica/chromatic.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/poly.hpp"

#include <array>
#include <vector>

namespace chromatica {

/// A(G): the hyperplanes x_i = x_j, {i,j} in E(G), in K^n with n = |V(G)|.
struct GraphicArrangement {
    Graph graph;

    std::size_t ambient_dim() const noexcept { return graph.vertex_count(); }
    std::size_t hyperplane_count() const noexcept { return graph.edge_count(); }
    /// Always false for n >= 1: the all-ones direction lies in every hyperplane.
    bool essential() const noexcept { return graph.vertex_count() == 0; }
};

/// Point or line of the real projective plane as a primitive integer triple
/// whose first nonzero entry is positive. The same normalization is used for
/// both, since P^2 is self-dual.
class ProjTriple {
public:
    /// Throws InvalidArgument for (0,0,0).
    ProjTriple(Integer a, Integer b, Integer c);

    const std::array<Integer, 3>& coeffs() const noexcept { return c_; }

    friend bool operator==(const ProjTriple&, const ProjTriple&) = default;
    friend bool operator<(const ProjTriple& x, const ProjTriple& y) { return x.c_ < y.c_; }

private:
    std::array<Integer, 3> c_;
};

using ProjLine = ProjTriple;
using ProjPoint = ProjTriple;

/// Intersection point of two distinct lines (cross product, normalized).
ProjPoint meet(const ProjLine& a, const ProjLine& b);

/// Distinct projective lines; the corresponding central plane arrangement in R^3.
class ProjLineArrangement {
public:
    ProjLineArrangement() = default;
    /// Throws LineAlreadyPresent on a duplicate after normalization.
    explicit ProjLineArrangement(std::vector<ProjLine> lines);

    const std::vector<ProjLine>& lines() const noexcept { return lines_; }
    std::size_t size() const noexcept { return lines_.size(); }
    bool contains(const ProjLine& l) const;
    void add(const ProjLine& l);

private:
    std::vector<ProjLine> lines_;
};

struct ChamberCount {
    Integer chambers;
    Integer bounded;

    friend bool operator==(const ChamberCount&, const ChamberCount&) = default;
};

Poly characteristic_graphic(const GraphicArrangement& a);

/// c = |chi(-1)|, bc = |chi(1)|. bc is raw |chi(1)|; it counts bounded
/// chambers only for essential arrangements.
ChamberCount chambers(const Poly& chi);

/// t^2 - m t + (m - 1); DomainError for m < 1.
Poly rank2_characteristic(long m);

/// Chamber count of A(G + e0) from c(A(G)): doubled for a Bridge, times
/// (2^(m-1) - 1) / 2^(m-2) for MinimalCycle(m). HypothesisViolated for a
/// Fallback edge; NonIntegral if the multiplier does not divide exactly.
Integer add_edge_chambers(const Graph& g, const Integer& chambers_g, const Edge& e0);

/// Number of distinct points in which l0 meets the lines of A.
/// LineAlreadyPresent if l0 is in A.
std::size_t intersect_count(const ProjLineArrangement& a, const ProjLine& l0);

/// chi(A + l0) = chi(A) - (t^2 - k t + (k - 1)); DomainError unless chi_a has
/// degree 3.
Poly add_line_characteristic(const Poly& chi_a, long k);

/// Folds every line in via intersect_count + add_line_characteristic, starting
/// from t^3 - t^2 for the first line. EmptyArrangement for no lines.
Poly characteristic_lines(const ProjLineArrangement& a);

}  // namespace chromatica
