#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kocalc {

// Dense GF(2) row vector packed into 64-bit words.
class F2Vec {
public:
    F2Vec() : n_(0) {}
    explicit F2Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(int i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    F2Vec& operator^=(const F2Vec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k) * 64 + __builtin_ctzll(w_[k]);
        return -1;
    }

    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

// Row-echelon solver over GF(2). Rows are added incrementally; the basis is
// kept reduced so membership tests and coordinate extraction are direct.
class F2Solver {
public:
    explicit F2Solver(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduce v against the current basis; returns the residue.
    F2Vec reduce(F2Vec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (v.get(pivot_[k])) v ^= rows_[k];
        }
        return v;
    }

    // Reduce and also report which basis rows were used.
    F2Vec reduce_tracked(F2Vec v, std::vector<int>& used) const {
        used.clear();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (v.get(pivot_[k])) {
                v ^= rows_[k];
                used.push_back(static_cast<int>(k));
            }
        }
        return v;
    }

    // Returns true if v enlarged the span.
    bool add_row(const F2Vec& v) {
        F2Vec r = reduce(v);
        int p = r.lowest_set();
        if (p < 0) return false;
        rows_.push_back(r);
        pivot_.push_back(p);
        return true;
    }

    bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }

private:
    int ncols_;
    std::vector<F2Vec> rows_;
    std::vector<int> pivot_;
};

}  // namespace kocalc
