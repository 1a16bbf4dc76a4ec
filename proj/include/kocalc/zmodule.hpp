#pragma once

#include "kocalc/smith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace kocalc {

// Finitely generated abelian group in invariant-factor form.
// Coordinate convention: torsion generators first (orders torsion[0] | torsion[1] | ...),
// then free generators. Torsion coordinates are canonicalized into [0, d).
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // each >= 2, divisibility chain

    int ngens() const { return free_rank + static_cast<int>(torsion.size()); }
    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    Int finite_order() const {
        Int o = 1;
        for (const Int& d : torsion) o *= d;
        return o;
    }

    // Order of generator i (0 = infinite).
    Int gen_order(int i) const {
        return i < static_cast<int>(torsion.size()) ? torsion[i] : Int(0);
    }

    std::vector<Int> reduce(std::vector<Int> v) const {
        if (static_cast<int>(v.size()) != ngens()) throw std::invalid_argument("AbelianGroup::reduce size");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            v[i] %= torsion[i];
            if (v[i] < 0) v[i] += torsion[i];
        }
        return v;
    }

    bool is_zero(const std::vector<Int>& v) const {
        auto r = reduce(v);
        for (const Int& x : r)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// Homomorphism between groups in the above coordinates; column j holds the
// image of source generator j. Entries of torsion target rows are reduced
// mod the target order.
struct GroupHom {
    AbelianGroup source, target;
    IntMatrix matrix;  // target.ngens() x source.ngens()

    std::vector<Int> apply(const std::vector<Int>& v) const { return target.reduce(matrix.mul_vec(v)); }

    // An order-d source generator must map to an element killed by d.
    bool respects_orders() const {
        for (int j = 0; j < source.ngens(); ++j) {
            Int d = source.gen_order(j);
            if (d == 0) continue;
            std::vector<Int> img = matrix.col_vec(j);
            for (auto& x : img) x *= d;
            if (!target.is_zero(img)) return false;
        }
        return true;
    }
};

// Subquotient (span(gens) + R) / (span(rels) + R) of Z^k with ambient
// relation lattice R = { d_i e_i : ambient_orders[i] != 0 }.
//
// Supplies the presentation, generator vectors in ambient coordinates, and a
// coordinate solver for ambient vectors lying in the subgroup.
class Subquotient {
public:
    Subquotient(int k, const std::vector<Int>& ambient_orders,
                const std::vector<std::vector<Int>>& gens,
                const std::vector<std::vector<Int>>& rels);

    const AbelianGroup& shape() const { return shape_; }
    const std::vector<std::vector<Int>>& gen_vectors() const { return gen_vectors_; }

    // Coordinates of an ambient vector in the subquotient.
    // Returns nullopt if v is not in span(gens) + R.
    std::optional<std::vector<Int>> coords(const std::vector<Int>& v) const;

    std::vector<Int> vector_of(const std::vector<Int>& coords) const;

private:
    int k_;
    std::vector<Int> ambient_orders_;
    AbelianGroup shape_;
    std::vector<std::vector<Int>> gen_vectors_;
    IntMatrix Ulat_;               // U of the lattice SNF
    std::vector<Int> lat_div_;     // divisors of the lattice SNF
    int lat_rank_ = 0;
    IntMatrix Uq_;                 // U' of the quotient SNF
    std::vector<Int> q_div_;       // full divisor list of quotient SNF (length lat_rank_)
    std::vector<int> kept_;        // indices (in quotient SNF order) of surviving generators
};

}  // namespace kocalc
