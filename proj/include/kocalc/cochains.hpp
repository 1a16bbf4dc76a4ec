#pragma once

#include "kocalc/delta_complex.hpp"
#include "kocalc/sparse_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace kocalc {

using Rat = boost::multiprecision::cpp_rational;

// value in [0,1) representing the class mod Z
inline Rat frac_mod1(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    Int m = num % den;
    if (m < 0) m += den;
    return Rat(m, den);
}

// ---------------------------------------------------------------------------
// Twisted coboundaries. Convention: the monodromy sign of the leading edge
// [v0 v1] multiplies the 0-th face term,
//   (delta c)(s) = sign(nu, edge01(s)) * c(d_0 s) + sum_{i>=1} (-1)^i c(d_i s).
// delta^2 = 0 exactly when nu is a cocycle.
// ---------------------------------------------------------------------------

// nu == nullptr means the untwisted coboundary.
IntMatrix coboundary_z(const DeltaComplex& X, int p, const SignCocycle* nu);

std::vector<Int> apply_coboundary_z(const DeltaComplex& X, int p, const std::vector<Int>& c,
                                    const SignCocycle* nu);
std::vector<Rat> apply_coboundary_q(const DeltaComplex& X, int p, const std::vector<Rat>& c,
                                    const SignCocycle* nu);
F2Vec apply_coboundary_f2(const DeltaComplex& X, int p, const F2Vec& c);

// Columns of the mod-2 coboundary C^p -> C^{p+1} (twists act trivially mod 2).
std::vector<F2Vec> coboundary_f2_columns(const DeltaComplex& X, int p);

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

// Front-face/back-face cup product mod 2.
F2Vec cup_f2(const DeltaComplex& X, int p, const F2Vec& a, int q, const F2Vec& b);

// Steenrod cup-i product mod 2. Satisfies
//   delta(a u_i b) = a u_{i-1} b + b u_{i-1} a + (delta a) u_i b + a u_i (delta b).
F2Vec cup_i_f2(const DeltaComplex& X, int p, const F2Vec& a, int q, const F2Vec& b, int i);

// Sq^k at the cochain level: a u_{p-k} a (zero for k > p). For a cocycle the
// result is a cocycle.
F2Vec sq_cochain(const DeltaComplex& X, int k, int p, const F2Vec& a);

// Integral cup product; b may carry a local system, whose monodromy is
// transported along the front path v0 -> ... -> vp (the front-face
// convention for twisted products).
std::vector<Int> cup_z(const DeltaComplex& X, int p, const std::vector<Int>& a, int q,
                       const std::vector<Int>& b, const SignCocycle* nu_b);

// Z/2 x Q/Z pairing (used for j composed with cup terms).
std::vector<Rat> cup_f2_q(const DeltaComplex& X, int p, const F2Vec& a, int q,
                          const std::vector<Rat>& b, const SignCocycle* nu_b);

// ---------------------------------------------------------------------------
// Coefficient maps
// ---------------------------------------------------------------------------

// Bockstein of 0 -> Z -> Z -> Z/2 -> 0 with target twisted by nu:
// lift to a 0/1 integral cochain, apply the twisted coboundary, halve.
std::vector<Int> bockstein_cochain(const DeltaComplex& X, int p, const F2Vec& z,
                                   const SignCocycle* nu);

// Bockstein of 0 -> Z -> Q -> Q/Z -> 0 (twisted): integral coboundary of a
// rational lift.
std::vector<Int> bockstein_u1_cochain(const DeltaComplex& X, int p, const std::vector<Rat>& z,
                                      const SignCocycle* nu);

F2Vec reduce_mod2_cochain(const std::vector<Int>& c);

// Inclusion via the 2nd roots of unity: values in {0, 1/2}.
std::vector<Rat> j2_cochain(const F2Vec& c);

}  // namespace kocalc
