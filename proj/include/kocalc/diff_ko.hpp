#pragma once

#include "kocalc/ahss.hpp"

#include <string>

namespace kocalc {

// Degree-4k rational class given by an integral cocycle and an optional
// denominator. Inputs to the geometric checks must be integral.
struct RationalClass {
    int degree = 4;
    std::vector<Int> rep;  // integral cocycle
    Int denominator = 1;
};

// E2 page of the differential-theory spectral sequence, at its computable
// shadow. Fourth-quadrant rows repeat mod 4:
//   q = -3 mod 4 : H^p(M; L/Z)   (Q/Z groups, twisted by sigma1)
//   q = -1, -2 mod 4 : H^p(M; Z/2)
// and the (0,0) corner is the symbolic flat-forms entry whose computable
// data is the list of twisted rational Betti numbers.
struct DiffE2Page {
    int dim = 0;
    bool twisted = false;
    std::string corner;               // symbolic descriptor of the (0,0) entry
    std::vector<int> rational_ranks;  // b_p(X; L), p = 0..dim
    struct QmodZEntry {
        int divisible_rank = 0;
        AbelianGroup finite;
    };
    std::vector<QmodZEntry> row_u1;  // p = 0..dim (page uses p > 0)
    std::vector<int> row_z2;         // dim of H^p(Z/2)
};

DiffE2Page diff_e2(Workspace& ws);

// Class handles used by the flat differentials.
struct ClassF2 {
    int degree = 0;
    F2Vec rep;
};
struct ClassZ {
    int degree = 0;
    bool twisted = false;
    std::vector<Int> rep;
};
struct ClassQZ {
    int degree = 0;
    bool twisted = false;
    bool divisible_part = false;  // symbolic marker; carries no finite data
    std::vector<Rat> rep;
};

// Flat differentials of the refined theory, as composites:
//   d^{p,-8t-1} = Sq^2 + sigma1 u Sq^1 + sigma2 u            (Z/2 -> Z/2)
//   d^{p,-8t-7} = (Sq^2 + sigma1 u Sq^1 + sigma2 u) o r o beta (L/Z -> Z/2)
//   d^{p,-8t-2} = j o Sq^2 + j o (sigma2 u)                   (Z/2 -> L/Z)
ClassF2 flat_d2_z2(Workspace& ws, const ClassF2& a);
ClassF2 flat_d3_u1_to_z2(Workspace& ws, const ClassQZ& a);
ClassQZ flat_d3_z2_to_u1(Workspace& ws, const ClassF2& a);

// Finite-part coordinates of a Q/Z class, read through the Bockstein into
// the torsion of H^{p+1}(X; Z_sigma1). Divisible-part classes map to zero.
std::vector<Int> qmodz_finite_coords(Workspace& ws, const ClassQZ& a);

// Lifting a 4-form through the geometric d4: reduces the condition
// (1/2)[G4] = j2(x^2 + sigma2 x) mod Z to the mod-2 equation
// rho2(G) = x^2 + sigma2 u x and searches H^2(X;Z/2) for a witness.
// sigma1 twists are not supported here (the lifting statements assume
// sigma = sigma2); passing one raises UnsupportedError.
struct LiftCheck {
    bool lifts = false;
    std::optional<std::vector<Int>> witness_coords;  // x2 in H^2(X;Z/2)
    std::vector<std::vector<Int>> searched;          // transcript of tried x coords
};
LiftCheck geometric_d4_check(Workspace& ws, const RationalClass& G);

// beta(B^2) obstruction for twisted Spin structures.
enum class SpinVerdict { Liftable, Obstructed, NecessaryOnly };
struct SpinCheck {
    SpinVerdict verdict;
    AbelianGroup obstruction_group;      // H^5(X;Z)
    std::vector<Int> obstruction_coords; // beta(B^2) in that group
};
SpinCheck check_twisted_spin(Workspace& ws, const ClassF2& B);

// dim <= 3: KO^0(M) = Z x H^1(M;Z/2) x H^2(M;Z/2) as sets; the forgetful
// map to topological KO is a group isomorphism, so the reduced order is
// cross-checkable against the spectral sequence.
struct LowDimKO {
    AbelianGroup h1, h2;
    Int set_size_finite;  // |H^1| * |H^2|
    std::string group_note;
};
LowDimKO low_dim_ko(Workspace& ws);

// Twist groups of the R-theory (Postnikov truncation of ko):
// untwisted: 0 -> H^3(Z) -> R^{-1} -> H^0(Z/2) x H^1(Z/2) -> 0;
// twisted differential: H^0 x H^1 x (flat part of H^3 with nabla).
struct RTheoryReport {
    AbelianGroup h3;  // H^3(X; Z_w)
    AbelianGroup h0_z2, h1_z2;
    DiffE2Page::QmodZEntry flat_h3;  // H^3(X; L/Z)
    std::string form_part;           // symbolic
    bool extension_resolved = false; // reported unsolved
};
RTheoryReport r_theory_groups(Workspace& ws);

// Wu-collapse check: with sigma2 = w2 supplied on an orientable complex,
// every x in H^2(X;Z/2) satisfies x^2 + w2 x = 0.
bool wu_collapse_check(Workspace& ws);

}  // namespace kocalc
