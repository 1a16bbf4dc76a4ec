#include "kocalc/zmodule.hpp"

namespace kocalc {

Subquotient::Subquotient(int k, const std::vector<Int>& ambient_orders,
                         const std::vector<std::vector<Int>>& gens,
                         const std::vector<std::vector<Int>>& rels)
    : k_(k), ambient_orders_(ambient_orders) {
    // Lattice L = span(gens) + R.
    std::vector<std::vector<Int>> lat_cols = gens;
    for (int i = 0; i < k; ++i) {
        if (ambient_orders_[i] != 0) {
            std::vector<Int> e(k, 0);
            e[i] = ambient_orders_[i];
            lat_cols.push_back(e);
        }
    }
    IntMatrix M(k, static_cast<int>(lat_cols.size()));
    for (int j = 0; j < static_cast<int>(lat_cols.size()); ++j)
        for (int i = 0; i < k; ++i)
            if (lat_cols[j][i] != 0) M.set(i, j, lat_cols[j][i]);
    SmithResult lat = smith_normal_form(M);
    Ulat_ = lat.U;
    lat_div_ = lat.divisors;
    lat_rank_ = lat.rank;

    // Basis of L: b_i = d_i * (column i of Uinv), i < lat_rank_.
    std::vector<std::vector<Int>> basis(lat_rank_);
    for (int i = 0; i < lat_rank_; ++i) {
        basis[i] = lat.Uinv.col_vec(i);
        for (auto& x : basis[i]) x *= lat_div_[i];
    }

    // Coordinates of the killed sublattice span(rels) + R in that basis.
    std::vector<std::vector<Int>> kill_cols = rels;
    for (int i = 0; i < k; ++i) {
        if (ambient_orders_[i] != 0) {
            std::vector<Int> e(k, 0);
            e[i] = ambient_orders_[i];
            kill_cols.push_back(e);
        }
    }
    IntMatrix X(lat_rank_, static_cast<int>(kill_cols.size()));
    for (int j = 0; j < static_cast<int>(kill_cols.size()); ++j) {
        std::vector<Int> w = Ulat_.mul_vec(kill_cols[j]);
        for (int i = 0; i < lat_rank_; ++i) {
            if (w[i] % lat_div_[i] != 0) throw std::logic_error("Subquotient: relation outside lattice");
            Int a = w[i] / lat_div_[i];
            if (a != 0) X.set(i, j, a);
        }
        for (int i = lat_rank_; i < k; ++i)
            if (w[i] != 0) throw std::logic_error("Subquotient: relation outside lattice");
    }
    SmithResult q = smith_normal_form(X);
    Uq_ = q.U;
    q_div_.assign(lat_rank_, 0);
    for (int i = 0; i < q.rank; ++i) q_div_[i] = q.divisors[i];

    // Surviving generators: torsion (divisor > 1) then free (divisor 0).
    for (int i = 0; i < lat_rank_; ++i)
        if (q_div_[i] > 1) kept_.push_back(i);
    for (int i = 0; i < lat_rank_; ++i)
        if (q_div_[i] == 0) kept_.push_back(i);

    shape_.free_rank = 0;
    for (int i : kept_) {
        if (q_div_[i] > 1)
            shape_.torsion.push_back(q_div_[i]);
        else
            shape_.free_rank += 1;
    }

    // Generator vectors: g_j = sum_i (Uq^{-1})_{ij} b_i.
    for (int idx : kept_) {
        std::vector<Int> col = q.Uinv.col_vec(idx);
        std::vector<Int> g(k, 0);
        for (int i = 0; i < lat_rank_; ++i)
            if (col[i] != 0)
                for (int a = 0; a < k; ++a) g[a] += col[i] * basis[i][a];
        gen_vectors_.push_back(std::move(g));
    }
}

std::optional<std::vector<Int>> Subquotient::coords(const std::vector<Int>& v) const {
    std::vector<Int> w = Ulat_.mul_vec(v);
    std::vector<Int> alpha(lat_rank_);
    for (int i = 0; i < lat_rank_; ++i) {
        if (w[i] % lat_div_[i] != 0) return std::nullopt;
        alpha[i] = w[i] / lat_div_[i];
    }
    for (int i = lat_rank_; i < k_; ++i)
        if (w[i] != 0) return std::nullopt;
    std::vector<Int> beta = Uq_.mul_vec(alpha);
    std::vector<Int> out;
    out.reserve(kept_.size());
    for (int idx : kept_) out.push_back(beta[idx]);
    return shape_.reduce(out);
}

std::vector<Int> Subquotient::vector_of(const std::vector<Int>& coords) const {
    if (coords.size() != gen_vectors_.size()) throw std::invalid_argument("Subquotient::vector_of size");
    std::vector<Int> v(k_, 0);
    for (std::size_t j = 0; j < coords.size(); ++j)
        for (int i = 0; i < k_; ++i) v[i] += coords[j] * gen_vectors_[j][i];
    return v;
}

}  // namespace kocalc
