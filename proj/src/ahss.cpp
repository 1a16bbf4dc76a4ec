#include "kocalc/ahss.hpp"

namespace kocalc {

namespace {

constexpr int kRows[4] = {0, 1, 2, 4};

// Generators of ker(h) as a subgroup of the source, in source coordinates.
// Solves M x = R_tgt y by taking the integer kernel of [M | R_tgt].
std::vector<std::vector<Int>> hom_kernel_gens(const GroupHom& h) {
    int s = h.source.ngens();
    int t = h.target.ngens();
    std::vector<Int> tors;
    for (int i = 0; i < t; ++i)
        if (h.target.gen_order(i) != 0) tors.push_back(h.target.gen_order(i));
    int extra = static_cast<int>(tors.size());
    IntMatrix B(t, s + extra);
    for (int i = 0; i < t; ++i)
        for (const auto& [j, v] : h.matrix.row(i)) B.set(i, j, v);
    {
        int col = s;
        for (int i = 0; i < t; ++i)
            if (h.target.gen_order(i) != 0) B.set(i, col++, h.target.gen_order(i));
    }
    SmithResult snf = smith_normal_form(B);
    std::vector<std::vector<Int>> gens;
    for (int k = 0; k < snf.kernel_dim(); ++k) {
        std::vector<Int> full = snf.kernel_basis_vector(k);
        std::vector<Int> proj(full.begin(), full.begin() + s);
        bool nonzero = false;
        for (const Int& v : proj)
            if (v != 0) nonzero = true;
        if (nonzero) gens.push_back(std::move(proj));
    }
    // Source torsion relations always lie in the kernel.
    for (int j = 0; j < s; ++j) {
        if (h.source.gen_order(j) != 0) {
            std::vector<Int> e(s, 0);
            e[j] = h.source.gen_order(j);
            gens.push_back(std::move(e));
        }
    }
    return gens;
}

std::vector<Int> ambient_orders_of(const AbelianGroup& g) {
    std::vector<Int> out(g.ngens(), 0);
    for (std::size_t i = 0; i < g.torsion.size(); ++i) out[i] = g.torsion[i];
    return out;
}

std::vector<std::vector<Int>> unit_vectors(int k) {
    std::vector<std::vector<Int>> out;
    for (int j = 0; j < k; ++j) {
        std::vector<Int> e(k, 0);
        e[j] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

AHSSState::AHSSState(Workspace& ws) : ws_(&ws), dim_(ws.X().dim()) {
    for (int p = 0; p <= dim_; ++p) {
        for (int qr : kRows) {
            Entry e;
            e.kind = KOCoefficients::row(qr);
            if (e.kind == RowKind::Z) {
                e.e2_shape = ws_->zgroup(p, true).shape();
            } else {
                e.e2_shape = ws_->f2group(p).shape();
            }
            e.e2_orders = ambient_orders_of(e.e2_shape);
            e.gens = unit_vectors(e.e2_shape.ngens());
            rebuild_page(e);
            entries_[{p, qr}] = std::move(e);
        }
    }
}

void AHSSState::rebuild_page(Entry& e) {
    e.page = std::make_shared<Subquotient>(e.e2_shape.ngens(), e.e2_orders, e.gens, e.rels);
}

AHSSState::Entry& AHSSState::entry(int p, int qr) { return entries_.at({p, qr}); }

const AHSSState::Entry* AHSSState::find_entry(int p, int qr) const {
    auto it = entries_.find({p, ((qr % 8) + 8) % 8});
    return it == entries_.end() ? nullptr : &it->second;
}

AbelianGroup AHSSState::entry_shape(int p, int qr) const {
    const Entry* e = find_entry(p, qr);
    return e ? e->page->shape() : AbelianGroup{};
}

AbelianGroup AHSSState::e2_shape(int p, int qr) const {
    const Entry* e = find_entry(p, qr);
    return e ? e->e2_shape : AbelianGroup{};
}

bool AHSSState::entry_undetermined(int p, int qr) const {
    const Entry* e = find_entry(p, qr);
    return e ? e->undetermined : false;
}

const GroupHom* AHSSState::differential(int page, int p, int qr) const {
    auto it = diffs_.find({page, p, qr});
    return it == diffs_.end() ? nullptr : &it->second;
}

// --- cocycle-level differentials ---

F2Vec AHSSState::d2_z_row_cochain(int p, const std::vector<Int>& rep) const {
    const DeltaComplex& X = ws_->X();
    F2Vec y = reduce_mod2_cochain(rep);
    F2Vec out = sq_cochain(X, 2, p, y);
    const TwistData& tw = ws_->twist();
    if (tw.sigma1) {
        F2Vec sq1 = sq_cochain(X, 1, p, y);
        out ^= cup_f2(X, 1, tw.sigma1->values, p + 1, sq1);
    }
    if (tw.sigma2) out ^= cup_f2(X, 2, *tw.sigma2, p, y);
    return out;
}

F2Vec AHSSState::d2_z2_row_cochain(int p, const F2Vec& a) const {
    const DeltaComplex& X = ws_->X();
    F2Vec out = sq_cochain(X, 2, p, a);
    const TwistData& tw = ws_->twist();
    if (tw.sigma1) {
        F2Vec sq1 = sq_cochain(X, 1, p, a);
        out ^= cup_f2(X, 1, tw.sigma1->values, p + 1, sq1);
    }
    if (tw.sigma2) out ^= cup_f2(X, 2, *tw.sigma2, p, a);
    return out;
}

std::vector<Int> AHSSState::d3_z2_to_z_cochain(int p, const F2Vec& a) const {
    const DeltaComplex& X = ws_->X();
    F2Vec z = sq_cochain(X, 2, p, a);
    const TwistData& tw = ws_->twist();
    if (tw.sigma2) z ^= cup_f2(X, 2, *tw.sigma2, p, a);
    return bockstein_cochain(X, p + 2, z, ws_->sigma1());
}

// --- class-level differentials over E2 ---

std::vector<Int> AHSSState::d2_z_row(int p, const std::vector<Int>& coords) {
    const ZCohGroup& src = ws_->zgroup(p, true);
    if (p + 2 > dim_) return {};
    const F2CohGroup& tgt = ws_->f2group(p + 2);
    return tgt.coords(ws_->X(), d2_z_row_cochain(p, src.rep_of(coords)));
}

std::vector<Int> AHSSState::d2_z2_row(int p, const std::vector<Int>& coords) {
    const F2CohGroup& src = ws_->f2group(p);
    if (p + 2 > dim_) return {};
    const F2CohGroup& tgt = ws_->f2group(p + 2);
    return tgt.coords(ws_->X(), d2_z2_row_cochain(p, src.rep_of(coords)));
}

std::vector<Int> AHSSState::d3_z2_to_z(int p, const std::vector<Int>& e3_coords) {
    if (!turned_) throw std::logic_error("d3_z2_to_z: call turn_pages() first");
    Entry& src = entry(p, 2);
    if (p + 3 > dim_) return {};
    Entry& tgt = entry(p + 3, 4);
    std::vector<Int> e2vec = src.page->vector_of(e3_coords);
    F2Vec rep = f2_rep_from_e2(p, e2vec);
    std::vector<Int> val = d3_z2_to_z_cochain(p, rep);
    std::vector<Int> tcoords = ws_->zgroup(p + 3, true).coords(val);
    auto page_coords = tgt.page->coords(tcoords);
    if (!page_coords) throw std::logic_error("d3 value outside the E3 subquotient");
    return *page_coords;
}

F2Vec AHSSState::f2_rep_from_e2(int p, const std::vector<Int>& coords) const {
    return ws_->f2group(p).rep_of(coords);
}

std::vector<Int> AHSSState::z_rep_from_e2(int p, const std::vector<Int>& coords) const {
    return ws_->zgroup(p, true).rep_of(coords);
}

std::vector<Int> AHSSState::e2_coords_f2(int p, const F2Vec& cocycle) const {
    return ws_->f2group(p).coords(ws_->X(), cocycle);
}

std::vector<Int> AHSSState::e2_coords_z(int p, const std::vector<Int>& cocycle) const {
    return ws_->zgroup(p, true).coords(cocycle);
}

bool AHSSState::basepoint_column_protected() {
    return ws_->sigma1_trivial() && ws_->sigma2_trivial();
}

void AHSSState::turn_pages() {
    if (turned_) return;
    turned_ = true;

    // --- page 2: evaluate d2 on E2 generators ---
    for (int p = 0; p <= dim_; ++p) {
        // Z row -> Z/2 row
        {
            GroupHom h;
            h.source = entry(p, 0).e2_shape;
            h.target = (p + 2 <= dim_) ? entry(p + 2, 1).e2_shape : AbelianGroup{};
            h.matrix = IntMatrix(h.target.ngens(), h.source.ngens());
            if (p + 2 <= dim_) {
                for (int j = 0; j < h.source.ngens(); ++j) {
                    std::vector<Int> e(h.source.ngens(), 0);
                    e[j] = 1;
                    std::vector<Int> img = d2_z_row(p, e);
                    for (std::size_t i = 0; i < img.size(); ++i)
                        if (img[i] != 0) h.matrix.set(static_cast<int>(i), j, img[i]);
                }
            }
            diffs_[{2, p, 0}] = std::move(h);
        }
        // Z/2 row -> Z/2 row
        {
            GroupHom h;
            h.source = entry(p, 1).e2_shape;
            h.target = (p + 2 <= dim_) ? entry(p + 2, 2).e2_shape : AbelianGroup{};
            h.matrix = IntMatrix(h.target.ngens(), h.source.ngens());
            if (p + 2 <= dim_) {
                for (int j = 0; j < h.source.ngens(); ++j) {
                    std::vector<Int> e(h.source.ngens(), 0);
                    e[j] = 1;
                    std::vector<Int> img = d2_z2_row(p, e);
                    for (std::size_t i = 0; i < img.size(); ++i)
                        if (img[i] != 0) h.matrix.set(static_cast<int>(i), j, img[i]);
                }
            }
            diffs_[{2, p, 1}] = std::move(h);
        }
    }

    // d2 o d2 = 0 (genuine check of the twisted product conventions)
    for (int p = 0; p + 4 <= dim_; ++p) {
        const GroupHom& first = diffs_.at({2, p, 0});
        const GroupHom& second = diffs_.at({2, p + 2, 1});
        IntMatrix comp = second.matrix.mul(first.matrix);
        for (int j = 0; j < comp.cols(); ++j) {
            if (!second.target.is_zero(comp.col_vec(j)))
                throw std::logic_error("d2 o d2 != 0");
        }
    }

    // --- E3 ---
    for (int p = 0; p <= dim_; ++p) {
        {
            Entry& e = entry(p, 0);
            e.gens = hom_kernel_gens(diffs_.at({2, p, 0}));
            rebuild_page(e);
        }
        {
            Entry& e = entry(p, 1);
            e.gens = hom_kernel_gens(diffs_.at({2, p, 1}));
            if (p >= 2) {
                const GroupHom& in = diffs_.at({2, p - 2, 0});
                for (int j = 0; j < in.matrix.cols(); ++j) e.rels.push_back(in.matrix.col_vec(j));
            }
            rebuild_page(e);
        }
        {
            Entry& e = entry(p, 2);
            if (p >= 2) {
                const GroupHom& in = diffs_.at({2, p - 2, 1});
                for (int j = 0; j < in.matrix.cols(); ++j) e.rels.push_back(in.matrix.col_vec(j));
            }
            rebuild_page(e);
        }
    }

    // --- page 3: d3 = beta Sq^2 + beta sigma2, rows (p,2) -> (p+3,4) ---
    for (int p = 0; p <= dim_; ++p) {
        Entry& src = entry(p, 2);
        GroupHom h;
        h.source = src.page->shape();
        h.target = (p + 3 <= dim_) ? entry(p + 3, 4).page->shape() : AbelianGroup{};
        h.matrix = IntMatrix(h.target.ngens(), h.source.ngens());
        if (p + 3 <= dim_ && h.source.ngens() > 0) {
            for (int j = 0; j < h.source.ngens(); ++j) {
                std::vector<Int> e(h.source.ngens(), 0);
                e[j] = 1;
                std::vector<Int> img = d3_z2_to_z(p, e);
                for (std::size_t i = 0; i < img.size(); ++i)
                    if (img[i] != 0) h.matrix.set(static_cast<int>(i), j, img[i]);
            }
        }
        diffs_[{3, p, 2}] = std::move(h);
    }

    // --- E4 ---
    for (int p = 0; p <= dim_; ++p) {
        {
            Entry& e = entry(p, 2);
            const GroupHom& h = diffs_.at({3, p, 2});
            auto ker_page = hom_kernel_gens(h);
            std::vector<std::vector<Int>> new_gens = e.rels;  // killed classes stay in the subgroup
            for (const auto& kc : ker_page) new_gens.push_back(e.page->vector_of(kc));
            e.gens = std::move(new_gens);
            rebuild_page(e);
        }
        if (p >= 3) {
            Entry& e = entry(p, 4);
            const GroupHom& h = diffs_.at({3, p - 3, 2});
            const Entry& src = entry(p - 3, 2);
            for (int j = 0; j < h.matrix.cols(); ++j) {
                // image vectors arrive in (p,4) page coordinates = E2 coordinates here,
                // via the page generators of the target
                std::vector<Int> pc = h.matrix.col_vec(j);
                e.rels.push_back(e.page->vector_of(pc));
            }
            (void)src;
            rebuild_page(e);
        }
    }

    // --- flag entries that unidentified differentials could still touch ---
    bool protected0 = basepoint_column_protected();
    auto flag_pair = [&](int ps, int qs, int pt, int qt) {
        auto is = entries_.find({ps, qs});
        auto it = entries_.find({pt, qt});
        if (is == entries_.end() || it == entries_.end()) return;
        if (is->second.page->shape().trivial() || it->second.page->shape().trivial()) return;
        if (ps == 0 && protected0) return;
        is->second.undetermined = true;
        it->second.undetermined = true;
    };
    // d3 from the Z rows (not identified by the formulas)
    for (int p = 0; p + 3 <= dim_; ++p) {
        flag_pair(p, 0, p + 3, 2);
        // qr=4 -> qr=6 is the zero row; nothing to flag
    }
    // d_r, r >= 4: any pair of nonzero rows (qr, qr+r-1 mod 8)
    for (int r = 4; r <= dim_; ++r) {
        for (int p = 0; p + r <= dim_; ++p) {
            for (int qs : kRows) {
                int qt = (qs + r - 1) % 8;
                if (KOCoefficients::row(qt) == RowKind::Zero) continue;
                flag_pair(p, qs, p + r, qt);
            }
        }
    }
}

KOGroupReport AHSSState::assemble_ko(int degree, bool reduced) {
    if (!turned_) turn_pages();
    KOGroupReport rep;
    rep.degree = degree;
    rep.reduced = reduced;
    int pstart = (reduced && basepoint_column_protected()) ? 1 : 0;
    for (int p = pstart; p <= dim_; ++p) {
        int qr = ((p - degree) % 8 + 8) % 8;
        if (KOCoefficients::row(qr) == RowKind::Zero) continue;
        const Entry* e = find_entry(p, qr);
        if (!e) continue;
        AbelianGroup g = e->page->shape();
        if (e->undetermined) rep.undetermined = true;
        if (!g.trivial()) {
            rep.finite_order *= g.finite_order();
            rep.free_rank += g.free_rank;
            rep.quotients.push_back(std::move(g));
        }
    }
    int finite_quotients = 0;
    for (const auto& q : rep.quotients)
        if (!q.torsion.empty()) ++finite_quotients;
    rep.extension_ambiguous = finite_quotients > 1;
    return rep;
}

KOGroupReport compute_ko(Workspace& ws, int degree, bool reduced) {
    AHSSState st(ws);
    st.turn_pages();
    return st.assemble_ko(degree, reduced);
}

}  // namespace kocalc
