#pragma once

#include "kocalc/delta_complex.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace kocalc {

// Per-dimension simplex map of a simplicial automorphism.
using DimMap = std::vector<std::vector<int>>;

DeltaComplex build_point();

// Boundary of the (n+1)-simplex.
DeltaComplex build_sphere(int n);

// Boundary of the (n+1)-dimensional cross-polytope: the n-sphere carrying the
// antipodal involution as an order-preserving simplex map (each simplex uses
// at most one of +e_i/-e_i, so ordering vertices by coordinate index is
// preserved by v -> -v).
struct CrossPolytope {
    DeltaComplex complex;
    Involution antipodal;
    DimMap antipodal_map;
};
CrossPolytope build_cross_polytope_sphere(int n);

// 4-vertex circles with the two involutions used by Klein bottles.
struct CircleWithInvolution {
    DeltaComplex complex;
    Involution inv;
    DimMap inv_map;
};
CircleWithInvolution build_circle_rotation();     // free half rotation
CircleWithInvolution build_circle_conjugation();  // reflection z -> conj(z)

// Shuffle (staircase, with diagonal steps) triangulation of |X| x |Y|.
class ProductComplex {
public:
    struct Cell {
        int sx, sy;                            // factor simplices
        std::vector<std::pair<int, int>> pts;  // monotone lattice path
    };

    DeltaComplex complex;

    // Induced map on the product from degreewise maps on the factors.
    DimMap induce(const DimMap& fx, const DimMap& fy) const;

    const std::vector<std::vector<Cell>>& cells() const { return cells_; }

    friend ProductComplex product(const DeltaComplex& X, const DeltaComplex& Y);

private:
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

ProductComplex product(const DeltaComplex& X, const DeltaComplex& Y);

// Barycentric subdivision: vertices are simplices of X, a d-simplex is a
// chain of iterated faces recorded as position masks inside a carrier.
// Carries the last-vertex map for transporting cocycles from X to sd(X).
class SdComplex {
public:
    struct Cell {
        int carrier_dim, carrier_id;
        std::vector<std::uint32_t> flags;  // strictly ascending, last = full mask
    };

    DeltaComplex sd;
    SimplicialMap last_vertex;  // sd -> X, may collapse

    // Induced involution on sd(X) from a setwise simplex involution on X.
    // Requires simplices of X to have pairwise distinct vertices.
    DimMap induce(const DeltaComplex& X, const Involution& inv, const DimMap& setwise) const;

    friend SdComplex barycentric_subdivide(const DeltaComplex& X);

private:
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<std::tuple<int, int, std::vector<std::uint32_t>>, int>> index_;
};

SdComplex barycentric_subdivide(const DeltaComplex& X);

// Quotient of a free simplicial involution, with the classifying cocycle of
// the double cover and the projection from the cover actually used
// (the input complex, or its subdivision when one was needed).
struct QuotientResult {
    DeltaComplex quotient;
    SignCocycle deck;
    DeltaComplex cover;
    SimplicialMap projection;  // cover -> quotient
    int subdivisions = 0;
};

// Derive the ordered simplex map of a vertex involution; nullopt when the
// involution is not order-preserving (or tuples are ambiguous).
std::optional<DimMap> induce_ordered(const DeltaComplex& X, const Involution& inv);

QuotientResult quotient_by_involution(const DeltaComplex& X, const Involution& inv);

// Quotient along an already-derived simplex-level involution.
QuotientResult quotient_by_simplex_map(const DeltaComplex& X, const DimMap& m);

// Real projective n-space as cross-polytope mod antipode. The cocycle
// classifies the orientation double cover S^n -> RP^n; its class is the
// generator x of H^1(RP^n; Z/2) (= w_1 of the canonical bundle).
struct RpResult {
    DeltaComplex complex;
    SignCocycle w1;
    QuotientResult cover_data;
};
RpResult build_rp(int n);

DeltaComplex build_torus(int n);

// n-dimensional Klein bottle: torus mod (conjugation^(n-1), half rotation).
// sigma1 classifies the orientation double cover T^n -> K_n.
struct KleinResult {
    DeltaComplex complex;
    SignCocycle sigma1;
    QuotientResult cover_data;
};
KleinResult build_klein(int n);

}  // namespace kocalc
