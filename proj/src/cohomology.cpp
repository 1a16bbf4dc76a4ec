#include "kocalc/cohomology.hpp"

namespace kocalc {

// ---------------------------------------------------------------------------
// ZCohGroup
// ---------------------------------------------------------------------------

ZCohGroup::ZCohGroup(const DeltaComplex& X, int p, const SignCocycle* nu) : degree_(p) {
    n_ = X.count(p);
    if (n_ == 0) return;  // trivial group in an empty degree

    SmithResult out = smith_normal_form(coboundary_z(X, p, nu));
    Vinv_ = out.Vinv;
    rankD_ = out.rank;
    int kdim = n_ - rankD_;

    IntMatrix Din = (p >= 1) ? coboundary_z(X, p - 1, nu) : IntMatrix(n_, 0);
    SmithResult sin = smith_normal_form(Din);
    Uin_ = sin.U;
    Vin_ = sin.V;
    din_ = sin.divisors;
    rank_in_ = sin.rank;

    // Kernel coordinates of the image columns.
    IntMatrix Xm(kdim, Din.cols());
    for (int j = 0; j < Din.cols(); ++j) {
        std::vector<Int> y = Vinv_.mul_vec(Din.col_vec(j));
        for (int i = 0; i < rankD_; ++i)
            if (y[i] != 0) throw std::logic_error("coboundary image not in kernel: delta^2 != 0");
        for (int i = 0; i < kdim; ++i)
            if (y[rankD_ + i] != 0) Xm.set(i, j, y[rankD_ + i]);
    }
    SmithResult q = smith_normal_form(Xm);
    Uq_ = q.U;
    qdiv_.assign(kdim, 0);
    for (int i = 0; i < q.rank; ++i) qdiv_[i] = q.divisors[i];
    for (int i = 0; i < kdim; ++i)
        if (qdiv_[i] > 1) kept_.push_back(i);
    for (int i = 0; i < kdim; ++i)
        if (qdiv_[i] == 0) kept_.push_back(i);

    shape_.free_rank = 0;
    for (int i : kept_) {
        if (qdiv_[i] > 1)
            shape_.torsion.push_back(qdiv_[i]);
        else
            shape_.free_rank += 1;
    }

    // Representative of generator j: sum_i (Uq^{-1})_{i,kept_j} * K_i with
    // K_i the kernel basis vectors (columns rankD_.. of V).
    for (int idx : kept_) {
        std::vector<Int> col = q.Uinv.col_vec(idx);
        std::vector<Int> rep(n_, 0);
        for (int i = 0; i < kdim; ++i) {
            if (col[i] == 0) continue;
            std::vector<Int> K = out.V.col_vec(rankD_ + i);
            for (int a = 0; a < n_; ++a) rep[a] += col[i] * K[a];
        }
        reps_.push_back(std::move(rep));
    }
}

std::vector<Int> ZCohGroup::coords(const std::vector<Int>& cocycle) const {
    if (static_cast<int>(cocycle.size()) != n_) throw std::invalid_argument("ZCohGroup::coords size");
    if (n_ == 0) return {};
    std::vector<Int> y = Vinv_.mul_vec(cocycle);
    for (int i = 0; i < rankD_; ++i)
        if (y[i] != 0) throw ValidationError("not a cocycle");
    int kdim = n_ - rankD_;
    std::vector<Int> kappa(y.begin() + rankD_, y.end());
    std::vector<Int> beta = Uq_.mul_vec(kappa);
    std::vector<Int> outc;
    outc.reserve(kept_.size());
    for (int idx : kept_) outc.push_back(beta[idx]);
    (void)kdim;
    return shape_.reduce(outc);
}

std::vector<Int> ZCohGroup::rep_of(const std::vector<Int>& coords) const {
    std::vector<Int> rep(n_, 0);
    for (std::size_t j = 0; j < coords.size(); ++j)
        for (int a = 0; a < n_; ++a) rep[a] += coords[j] * reps_[j][a];
    return rep;
}

bool ZCohGroup::class_is_zero(const std::vector<Int>& cocycle) const {
    if (n_ == 0) return true;
    auto c = coords(cocycle);
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

std::vector<Int> ZCohGroup::preimage_of_image(const std::vector<Int>& target) const {
    // Solve Din c = target via its SNF (S = U Din V).
    std::vector<Int> w = Uin_.mul_vec(target);
    std::vector<Int> y(Vin_.cols(), 0);
    for (int i = 0; i < rank_in_; ++i) {
        if (w[i] % din_[i] != 0) throw std::logic_error("preimage_of_image: not in image");
        y[i] = w[i] / din_[i];
    }
    for (std::size_t i = rank_in_; i < w.size(); ++i)
        if (w[i] != 0) throw std::logic_error("preimage_of_image: not in image");
    return Vin_.mul_vec(y);
}

// ---------------------------------------------------------------------------
// F2CohGroup
// ---------------------------------------------------------------------------

F2CohGroup::F2CohGroup(const DeltaComplex& X, int p) : degree_(p), solver_(X.count(p)) {
    int n = X.count(p);
    if (n == 0) return;

    // Image of the incoming coboundary.
    if (p >= 1) {
        auto cols = coboundary_f2_columns(X, p - 1);
        for (const auto& c : cols) solver_.add_row(c);
    }

    // Kernel of the outgoing coboundary via the augmented-row trick.
    int m = X.count(p + 1);
    std::vector<F2Vec> kernel;
    {
        // rows [delta(e_s) | e_s]; reduce on the first m columns only
        std::vector<F2Vec> rows;
        std::vector<int> pivots;
        auto cols = coboundary_f2_columns(X, p);  // delta(e_s)
        for (int s = 0; s < n; ++s) {
            F2Vec aug(m + n);
            for (int t = 0; t < m; ++t)
                if (cols[s].get(t)) aug.set(t, true);
            aug.set(m + s, true);
            // reduce against stored rows (pivots < m)
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (aug.get(pivots[k])) aug ^= rows[k];
            int piv = -1;
            for (int t = 0; t < m; ++t)
                if (aug.get(t)) {
                    piv = t;
                    break;
                }
            if (piv >= 0) {
                rows.push_back(aug);
                pivots.push_back(piv);
            } else {
                F2Vec k(n);
                for (int s2 = 0; s2 < n; ++s2)
                    if (aug.get(m + s2)) k.set(s2, true);
                kernel.push_back(k);
            }
        }
    }

    for (const auto& k : kernel) {
        int before = solver_.rank();
        if (solver_.add_row(k)) {
            reps_.push_back(k);
            rep_rows_.push_back(before);
        }
    }
    dim_ = static_cast<int>(reps_.size());
}

std::vector<Int> F2CohGroup::coords(const DeltaComplex& X, const F2Vec& cocycle) const {
    if (cocycle.size() != X.count(degree_)) throw std::invalid_argument("F2CohGroup::coords size");
    if (!apply_coboundary_f2(X, degree_, cocycle).is_zero()) throw ValidationError("not a cocycle");
    std::vector<int> used;
    F2Vec r = solver_.reduce_tracked(cocycle, used);
    if (!r.is_zero()) throw std::logic_error("cocycle outside kernel+image span");
    std::vector<Int> out(dim_, 0);
    for (int u : used)
        for (int j = 0; j < dim_; ++j)
            if (rep_rows_[j] == u) out[j] = 1;
    return out;
}

F2Vec F2CohGroup::rep_of(const std::vector<Int>& coords) const {
    F2Vec out = reps_.empty() ? F2Vec(0) : F2Vec(reps_[0].size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j] % 2 != 0) out ^= reps_[j];
    return out;
}

bool F2CohGroup::class_is_zero(const DeltaComplex& X, const F2Vec& cocycle) const {
    if (cocycle.size() == 0) return true;
    auto c = coords(X, cocycle);
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// TwistData / Workspace
// ---------------------------------------------------------------------------

void TwistData::require_valid(const DeltaComplex& X) const {
    if (sigma1) sigma1->require_valid(X);
    if (sigma2) {
        if (sigma2->size() != X.count(2))
            throw ValidationError("sigma2 has the wrong length for degree 2");
        if (!apply_coboundary_f2(X, 2, *sigma2).is_zero())
            throw ValidationError("sigma2 is not a cocycle");
    }
}

Workspace::Workspace(const DeltaComplex& X, TwistData tw) : X_(&X), tw_(std::move(tw)) {
    X.validate();
    X.require_connected();
    tw_.require_valid(X);
}

const ZCohGroup& Workspace::zgroup(int p, bool twisted) {
    bool tw = twisted && sigma1() != nullptr;
    auto key = std::make_pair(p, tw);
    auto it = zgroups_.find(key);
    if (it == zgroups_.end())
        it = zgroups_.emplace(key, ZCohGroup(*X_, p, tw ? sigma1() : nullptr)).first;
    return it->second;
}

const F2CohGroup& Workspace::f2group(int p) {
    auto it = f2groups_.find(p);
    if (it == f2groups_.end()) it = f2groups_.emplace(p, F2CohGroup(*X_, p)).first;
    return it->second;
}

const SmithResult& Workspace::snf(int p, bool twisted) {
    bool tw = twisted && sigma1() != nullptr;
    auto key = std::make_pair(p, tw);
    auto it = snfs_.find(key);
    if (it == snfs_.end())
        it = snfs_.emplace(key, smith_normal_form(coboundary_z(*X_, p, tw ? sigma1() : nullptr))).first;
    return it->second;
}

int Workspace::rational_rank(int p, bool twisted) {
    if (p < 0 || p > X_->dim()) return 0;
    int n = X_->count(p);
    int rank_out = snf(p, twisted).rank;
    int rank_in = (p >= 1) ? snf(p - 1, twisted).rank : 0;
    return n - rank_out - rank_in;
}

const QmodZGroup& Workspace::qmodz(int p, bool twisted) {
    bool tw = twisted && sigma1() != nullptr;
    auto key = std::make_pair(p, tw);
    auto it = qgroups_.find(key);
    if (it != qgroups_.end()) return it->second;

    QmodZGroup g;
    g.degree = p;
    g.divisible_rank = rational_rank(p, twisted);
    // finite part = torsion of H^{p+1}(X; Z_nu), with representative c/d for
    // each order-d torsion generator z (where delta c = d z).
    const ZCohGroup& next = zgroup(p + 1, twisted);
    for (std::size_t j = 0; j < next.shape().torsion.size(); ++j) {
        Int d = next.shape().torsion[j];
        g.finite.torsion.push_back(d);
        std::vector<Int> dz = next.reps()[j];
        for (auto& v : dz) v *= d;
        std::vector<Int> c = next.preimage_of_image(dz);
        std::vector<Rat> rep(c.size());
        for (std::size_t a = 0; a < c.size(); ++a) rep[a] = frac_mod1(Rat(c[a], d));
        g.reps.push_back(std::move(rep));
    }
    return qgroups_.emplace(key, std::move(g)).first->second;
}

bool Workspace::sigma1_trivial() {
    if (!s1_trivial_) {
        if (!tw_.sigma1)
            s1_trivial_ = true;
        else
            s1_trivial_ = f2group(1).class_is_zero(*X_, tw_.sigma1->values);
    }
    return *s1_trivial_;
}

bool Workspace::sigma2_trivial() {
    if (!s2_trivial_) {
        if (!tw_.sigma2)
            s2_trivial_ = true;
        else
            s2_trivial_ = f2group(2).class_is_zero(*X_, *tw_.sigma2);
    }
    return *s2_trivial_;
}

CohomologySummary cohomology(Workspace& ws, Coeff coeff, bool twisted, int p) {
    CohomologySummary out;
    out.coeff = coeff;
    out.degree = p;
    switch (coeff) {
        case Coeff::Z:
            out.shape = ws.zgroup(p, twisted).shape();
            break;
        case Coeff::Z2:
            out.shape = ws.f2group(p).shape();
            break;
        case Coeff::QmodZ: {
            const auto& g = ws.qmodz(p, twisted);
            out.shape = g.finite;
            out.divisible_rank = g.divisible_rank;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Induced maps
// ---------------------------------------------------------------------------

namespace {

void verify_chain_map_z(const DeltaComplex& srcX, const DeltaComplex& tgtX, const SimplicialMap& f,
                        int p, const SignCocycle* nu_src, const SignCocycle* nu_tgt) {
    // f# delta = delta f# checked on target basis cochains in degrees p-1, p.
    for (int d = std::max(0, p - 1); d <= p; ++d) {
        if (d + 1 > tgtX.dim()) continue;
        for (int t = 0; t < tgtX.count(d); ++t) {
            std::vector<Int> e(tgtX.count(d), 0);
            e[t] = 1;
            std::vector<Int> lhs =
                f.pullback(srcX, d + 1, apply_coboundary_z(tgtX, d, e, nu_tgt));
            std::vector<Int> rhs =
                apply_coboundary_z(srcX, d, f.pullback(srcX, d, e), nu_src);
            if (lhs != rhs) throw ValidationError("induced_map: not a chain map");
        }
    }
}

}  // namespace

GroupHom induced_map_z(const ZCohGroup& src_p, const ZCohGroup& tgt_p, const DeltaComplex& srcX,
                       const DeltaComplex& tgtX, const SimplicialMap& f, int p,
                       const SignCocycle* nu_src, const SignCocycle* nu_tgt) {
    verify_chain_map_z(srcX, tgtX, f, p, nu_src, nu_tgt);
    GroupHom h;
    h.source = tgt_p.shape();  // pullback: contravariant
    h.target = src_p.shape();
    h.matrix = IntMatrix(src_p.shape().ngens(), tgt_p.shape().ngens());
    for (int j = 0; j < tgt_p.shape().ngens(); ++j) {
        std::vector<Int> img = src_p.coords(f.pullback(srcX, p, tgt_p.reps()[j]));
        for (int i = 0; i < src_p.shape().ngens(); ++i)
            if (img[i] != 0) h.matrix.set(i, j, img[i]);
    }
    if (!h.respects_orders()) throw std::logic_error("induced map violates torsion orders");
    return h;
}

GroupHom induced_map_f2(const F2CohGroup& src_p, const F2CohGroup& tgt_p, const DeltaComplex& srcX,
                        const DeltaComplex& tgtX, const SimplicialMap& f, int p) {
    for (int d = std::max(0, p - 1); d <= p; ++d) {
        if (d + 1 > tgtX.dim()) continue;
        for (int t = 0; t < tgtX.count(d); ++t) {
            F2Vec e(tgtX.count(d));
            e.set(t, true);
            F2Vec lhs = f.pullback(srcX, d + 1, apply_coboundary_f2(tgtX, d, e));
            F2Vec rhs = apply_coboundary_f2(srcX, d, f.pullback(srcX, d, e));
            if (!(lhs == rhs)) throw ValidationError("induced_map: not a chain map");
        }
    }
    GroupHom h;
    h.source = tgt_p.shape();
    h.target = src_p.shape();
    h.matrix = IntMatrix(src_p.dim(), tgt_p.dim());
    for (int j = 0; j < tgt_p.dim(); ++j) {
        std::vector<Int> img = src_p.coords(srcX, f.pullback(srcX, p, tgt_p.reps()[j]));
        for (int i = 0; i < src_p.dim(); ++i)
            if (img[i] != 0) h.matrix.set(i, j, img[i]);
    }
    return h;
}

}  // namespace kocalc
