#pragma once

// Test-side oracles, deliberately independent of the production paths:
// dense GF(2) elimination, a textbook dense Smith reduction, and the
// binomial formula for Steenrod squares on projective space.

#include "kocalc/cochains.hpp"
#include "kocalc/delta_complex.hpp"

#include <vector>

namespace oracle {

using kocalc::DeltaComplex;
using kocalc::Int;

// GF(2) rank by plain Gaussian elimination on word-packed rows.
inline int f2_rank(std::vector<std::vector<std::uint64_t>> m, std::size_t cols) {
    int rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    auto bit = [](const std::vector<std::uint64_t>& r, std::size_t c) {
        return (r[c >> 6] >> (c & 63)) & 1u;
    };
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows; ++r)
            if (bit(m[r], c)) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r)
            if (bit(m[r], c))
                for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::uint64_t>> mod2_coboundary_packed(const DeltaComplex& X, int p) {
    std::size_t words = (X.count(p) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(X.count(p + 1),
                                              std::vector<std::uint64_t>(words, 0));
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i) {
            int f = X.face(p + 1, s, i);
            m[s][f >> 6] ^= (std::uint64_t{1} << (f & 63));
        }
    return m;
}

// Mod-2 Betti number via two independent ranks.
inline int mod2_betti(const DeltaComplex& X, int p) {
    int n = X.count(p);
    if (n == 0) return 0;
    int r_out = (p < X.dim()) ? f2_rank(mod2_coboundary_packed(X, p), n) : 0;
    int r_in = (p >= 1) ? f2_rank(mod2_coboundary_packed(X, p - 1), X.count(p - 1)) : 0;
    return n - r_out - r_in;
}

// Textbook dense Smith reduction; returns the nontrivial divisors (> 1).
inline std::vector<Int> dense_smith_divisors(std::vector<std::vector<Int>> a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Int> div;
    std::size_t t = 0;
    auto nonzero_at = [&](std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    Int v = kocalc::abs_int(a[i][j]);
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
        return found;
    };
    while (t < rows && t < cols) {
        std::size_t pi = t, pj = t;
        if (!nonzero_at(pi, pj)) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == t || a[i][t] == 0) continue;
                Int q = kocalc::sym_quot(a[i][t], a[t][t]);
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    again = true;
                }
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == t || a[t][j] == 0) continue;
                Int q = kocalc::sym_quot(a[t][j], a[t][t]);
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) again = true;
            }
        }
        ++t;
    }
    // divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            Int x = kocalc::abs_int(a[i][i]), y = kocalc::abs_int(a[i + 1][i + 1]);
            if (y % x != 0) {
                Int g = boost::multiprecision::gcd(x, y);
                Int l = x / g * y;
                a[i][i] = g;
                a[i + 1][i + 1] = l;
                changed = true;
            }
        }
    }
    for (std::size_t i = 0; i < t; ++i) {
        Int v = kocalc::abs_int(a[i][i]);
        if (v > 1) div.push_back(v);
    }
    return div;
}

inline std::vector<std::vector<Int>> z_coboundary_dense(const DeltaComplex& X, int p,
                                                        const kocalc::SignCocycle* nu) {
    std::vector<std::vector<Int>> m(X.count(p + 1), std::vector<Int>(X.count(p), 0));
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            if (i == 0) sign = (nu && nu->value(X.edge01(p + 1, s))) ? -1 : 1;
            m[s][X.face(p + 1, s, i)] += sign;
        }
    return m;
}

inline Int dense_rank(std::vector<std::vector<Int>> a) {
    // rank = number of nonzero diagonal entries after Smith reduction
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (!rows || !cols) return 0;
    // fraction-free elimination
    int rank = 0;
    std::size_t t = 0;
    for (std::size_t c = 0; c < cols && t < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = t; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[t], a[pivot]);
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Int g = boost::multiprecision::gcd(a[r][c], a[t][c]);
            Int f1 = a[t][c] / g, f2 = a[r][c] / g;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] * f1 - a[t][k] * f2;
        }
        ++t;
        ++rank;
    }
    return rank;
}

// Integral cohomology torsion + free rank via the dense oracle.
struct DenseCohomology {
    Int free_rank;
    std::vector<Int> torsion;
};

inline DenseCohomology dense_cohomology(const DeltaComplex& X, int p, const kocalc::SignCocycle* nu) {
    DenseCohomology out;
    int n = X.count(p);
    if (n == 0) {
        out.free_rank = 0;
        return out;
    }
    Int rank_out = (p < X.dim()) ? dense_rank(z_coboundary_dense(X, p, nu)) : 0;
    Int rank_in = 0;
    if (p >= 1) {
        auto din = z_coboundary_dense(X, p - 1, nu);
        rank_in = dense_rank(din);
        out.torsion = dense_smith_divisors(din);
    }
    out.free_rank = n - rank_out - rank_in;
    return out;
}

// Lucas: C(n,k) mod 2.
inline int binom_mod2(int n, int k) { return ((n & k) == k) ? 1 : 0; }

}  // namespace oracle
