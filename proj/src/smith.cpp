#include "kocalc/smith.hpp"

#include <stdexcept>

namespace kocalc {

namespace {

struct Worker {
    IntMatrix A;
    IntMatrix U, Uinv, V, Vinv;

    explicit Worker(const IntMatrix& a)
        : A(a),
          U(IntMatrix::identity(a.rows())),
          Uinv(IntMatrix::identity(a.rows())),
          V(IntMatrix::identity(a.cols())),
          Vinv(IntMatrix::identity(a.cols())) {}

    // row i += q * row k  on A, mirrored on U (left transform) and Uinv.
    void row_op(int i, int k, const Int& q) {
        A.row_axpy(i, k, q);
        U.row_axpy(i, k, q);
        Uinv.col_axpy(k, i, -q);
    }

    // col j += q * col k  on A, mirrored on V (right transform) and Vinv.
    void col_op(int j, int k, const Int& q) {
        A.col_axpy(j, k, q);
        V.col_axpy(j, k, q);
        Vinv.row_axpy(k, j, -q);
    }

    void swap_rows(int i, int k) {
        A.swap_rows(i, k);
        U.swap_rows(i, k);
        Uinv.swap_cols(i, k);
    }

    void swap_cols(int j, int k) {
        A.swap_cols(j, k);
        V.swap_cols(j, k);
        Vinv.swap_rows(j, k);
    }

    void negate_row(int i) {
        A.negate_row(i);
        U.negate_row(i);
        for (int c : std::vector<int>(Uinv.rows_with_col(i).begin(), Uinv.rows_with_col(i).end())) {
            // negate column i of Uinv
            Int v = Uinv.get(c, i);
            Uinv.set(c, i, -v);
        }
    }

    // Pick a pivot among entries with row >= t, col >= t: smallest absolute
    // value, then smallest Markowitz fill estimate, then lowest (row, col).
    // Deterministic so that downstream bases are reproducible.
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best_val;
        long best_fill = 0;
        for (int i = t; i < A.rows(); ++i) {
            for (const auto& [j, v] : A.row(i)) {
                if (j < t) continue;
                Int a = abs_int(v);
                long fill = static_cast<long>(A.row_nnz(i) - 1) * (A.col_nnz(j) - 1);
                bool better = false;
                if (!found)
                    better = true;
                else if (a != best_val)
                    better = a < best_val;
                else if (fill != best_fill)
                    better = fill < best_fill;
                if (better) {
                    found = true;
                    best_val = a;
                    best_fill = fill;
                    pi = i;
                    pj = j;
                    if (best_val == 1 && best_fill == 0) return true;
                }
            }
        }
        return found;
    }

    void run(SmithResult& out) {
        int m = A.rows(), n = A.cols();
        int t = 0;
        while (t < m && t < n) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            // Clear row/column t; restart if a reduction leaves a remainder
            // that becomes the new (smaller) pivot.
            for (;;) {
                bool clean = true;
                Int p = A.get(t, t);
                std::vector<int> rows_here(A.rows_with_col(t).begin(), A.rows_with_col(t).end());
                for (int i : rows_here) {
                    if (i == t) continue;
                    Int q = sym_quot(A.get(i, t), p);
                    row_op(i, t, -q);
                    if (A.get(i, t) != 0) {
                        swap_rows(t, i);
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                std::vector<int> cols_here;
                for (const auto& [j, v] : A.row(t))
                    if (j != t) cols_here.push_back(j);
                for (int j : cols_here) {
                    Int q = sym_quot(A.get(t, j), p);
                    col_op(j, t, -q);
                    if (A.get(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                        break;
                    }
                }
                if (clean) break;
            }
            if (A.get(t, t) < 0) negate_row(t);
            ++t;
        }
        int r = t;

        // Enforce the divisibility chain d_i | d_{i+1}.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < r; ++i) {
                Int a = A.get(i, i), b = A.get(i + 1, i + 1);
                if (b % a == 0) continue;
                changed = true;
                // Put b into row i via a column op, then redo the 2x2 corner.
                col_op(i, i + 1, 1);
                for (;;) {
                    Int p = A.get(i, i);
                    Int x = A.get(i + 1, i);
                    if (x != 0) {
                        Int q = sym_quot(x, p);
                        row_op(i + 1, i, -q);
                        if (A.get(i + 1, i) != 0) {
                            swap_rows(i, i + 1);
                            continue;
                        }
                    }
                    Int y = A.get(i, i + 1);
                    if (y != 0) {
                        Int q = sym_quot(y, A.get(i, i));
                        col_op(i + 1, i, -q);
                        if (A.get(i, i + 1) != 0) {
                            swap_cols(i, i + 1);
                            continue;
                        }
                    }
                    break;
                }
                if (A.get(i, i) < 0) negate_row(i);
                if (A.get(i + 1, i + 1) < 0) negate_row(i + 1);
            }
        }

        out.S = A;
        out.U = U;
        out.Uinv = Uinv;
        out.V = V;
        out.Vinv = Vinv;
        out.rank = r;
        out.divisors.clear();
        for (int i = 0; i < r; ++i) out.divisors.push_back(A.get(i, i));
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    SmithResult res;
    Worker w(A);
    w.run(res);
    return res;
}

}  // namespace kocalc
