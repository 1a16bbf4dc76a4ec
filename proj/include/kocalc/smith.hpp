#pragma once

#include "kocalc/sparse_matrix.hpp"

#include <vector>

namespace kocalc {

// Smith normal form  S = U * A * V  with U, V unimodular and
// S = diag(d_1, ..., d_r, 0, ...), d_1 | d_2 | ... | d_r, d_i > 0.
// Uinv and Vinv are maintained alongside so that kernel coordinates and
// quotient presentations can be read off without inverting anything later.
struct SmithResult {
    IntMatrix S;
    IntMatrix U, Uinv;
    IntMatrix V, Vinv;
    std::vector<Int> divisors;  // d_1..d_r
    int rank = 0;

    // Columns rank..cols-1 of V form a basis of ker(A).
    std::vector<Int> kernel_basis_vector(int k) const { return V.col_vec(rank + k); }
    int kernel_dim() const { return V.cols() - rank; }
};

SmithResult smith_normal_form(const IntMatrix& A);

}  // namespace kocalc
