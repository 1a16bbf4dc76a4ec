#pragma once

#include "kocalc/integers.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace kocalc {

// Sparse integer matrix, row-major with a column occupancy index so that
// both row and column operations stay cheap during elimination.
// Invariant: stored entries are nonzero.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows), col_of_(cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<int, Int>& row(int i) const { return row_[i]; }
    const std::set<int>& rows_with_col(int j) const { return col_of_[j]; }

    Int get(int i, int j) const {
        auto it = row_[i].find(j);
        return it == row_[i].end() ? Int(0) : it->second;
    }

    void set(int i, int j, const Int& v) {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("IntMatrix::set");
        if (v == 0) {
            row_[i].erase(j);
            col_of_[j].erase(i);
        } else {
            row_[i][j] = v;
            col_of_[j].insert(i);
        }
    }

    void add_to(int i, int j, const Int& v) {
        if (v == 0) return;
        auto it = row_[i].find(j);
        if (it == row_[i].end()) {
            row_[i][j] = v;
            col_of_[j].insert(i);
        } else {
            it->second += v;
            if (it->second == 0) {
                row_[i].erase(it);
                col_of_[j].erase(i);
            }
        }
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : row_) n += r.size();
        return n;
    }

    int row_nnz(int i) const { return static_cast<int>(row_[i].size()); }
    int col_nnz(int j) const { return static_cast<int>(col_of_[j].size()); }

    // row i += q * row k
    void row_axpy(int i, int k, const Int& q) {
        if (q == 0 || i == k) return;
        for (const auto& [j, v] : row_[k]) add_to(i, j, q * v);
    }

    // col j += q * col k
    void col_axpy(int j, int k, const Int& q) {
        if (q == 0 || j == k) return;
        std::vector<std::pair<int, Int>> updates;
        for (int i : col_of_[k]) updates.emplace_back(i, q * row_[i].at(k));
        for (const auto& [i, v] : updates) add_to(i, j, v);
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (const auto& [j, v] : row_[i]) col_of_[j].erase(i);
        for (const auto& [j, v] : row_[k]) col_of_[j].erase(k);
        std::swap(row_[i], row_[k]);
        for (const auto& [j, v] : row_[i]) col_of_[j].insert(i);
        for (const auto& [j, v] : row_[k]) col_of_[j].insert(k);
    }

    void swap_cols(int j, int k) {
        if (j == k) return;
        std::set<int> touched = col_of_[j];
        touched.insert(col_of_[k].begin(), col_of_[k].end());
        for (int i : touched) {
            Int a = get(i, j), b = get(i, k);
            set(i, j, b);
            set(i, k, a);
        }
    }

    void negate_row(int i) {
        for (auto& [j, v] : row_[i]) v = -v;
    }

    // this * other
    IntMatrix mul(const IntMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix::mul shape");
        IntMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [k, v] : row_[i])
                for (const auto& [j, w] : other.row_[k]) out.add_to(i, j, v * w);
        return out;
    }

    std::vector<Int> mul_vec(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("IntMatrix::mul_vec shape");
        std::vector<Int> y(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : row_[i])
                if (x[j] != 0) y[i] += v * x[j];
        return y;
    }

    std::vector<Int> col_vec(int j) const {
        std::vector<Int> y(rows_, 0);
        for (int i : col_of_[j]) y[i] = row_[i].at(j);
        return y;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, Int>> row_;
    std::vector<std::set<int>> col_of_;
};

}  // namespace kocalc
