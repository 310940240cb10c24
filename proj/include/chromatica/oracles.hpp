#pragma once

#include "chromatica/arrangement.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/poly.hpp"

#include <cstdint>
#include <vector>

namespace chromatica::oracles {

// Size limits; beyond them the oracles throw TooLarge instead of running.
inline constexpr std::size_t kWhitneyMaxEdges = 25;
inline constexpr std::size_t kLatticeMaxVertices = 10;
inline constexpr double kMaxEnumeration = 1e8;

/// Sum over edge subsets S of (-1)^|S| t^(components of (V,S)).
Poly whitney_chromatic(const Graph& g);

/// Proper k-colorings by backtracking over vertices in label order.
Integer coloring_count(const Graph& g, long k);

/// Points of F_p^n off every hyperplane x_i = x_j, {i,j} in E.
Integer fp_point_count(const Graph& g, long p);

/// Intersection lattice of A(G) as the connected vertex partitions of G.
struct BondLattice {
    struct Element {
        std::vector<std::uint32_t> blocks;  // vertex bitmasks, sorted
        Integer mu;
        std::size_t dim = 0;  // number of blocks
        std::size_t rank = 0;  // n - dim
    };
    std::size_t n = 0;
    std::vector<Element> elements;  // elements[0] is the all-singletons bottom

    /// X <= Y in the lattice order: every block of X lies inside a block of Y.
    static bool below_or_equal(const Element& x, const Element& y);
};

BondLattice bond_lattice(const Graph& g);

/// Sum over the bond lattice of mu(X) t^dim(X).
Poly bond_lattice_characteristic(const Graph& g);

/// Characteristic polynomial of the central arrangement in R^3 whose
/// projectivization is `lines`, from the Mobius function of its rank-3
/// intersection lattice (planes, intersection lines, origin).
Poly lines_lattice_characteristic(const std::vector<ProjLine>& lines);

/// Chambers of that central arrangement counted on the unit sphere with
/// Euler's formula F = E - V + 2.
Integer sphere_chamber_count(const std::vector<ProjLine>& lines);

}  // namespace chromatica::oracles
