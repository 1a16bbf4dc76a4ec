#include "kocalc/diff_ko.hpp"

namespace kocalc {

DiffE2Page diff_e2(Workspace& ws) {
    DiffE2Page out;
    out.dim = ws.X().dim();
    out.twisted = !ws.sigma1_trivial();
    out.corner = out.twisted
                     ? "flat twisted forms, graded by 4Z, local system: sigma1"
                     : "closed forms with values in R[alpha, alpha^-1], graded by 4Z";
    for (int p = 0; p <= out.dim; ++p) {
        out.rational_ranks.push_back(ws.rational_rank(p, true));
        const QmodZGroup& q = ws.qmodz(p, true);
        out.row_u1.push_back({q.divisible_rank, q.finite});
        out.row_z2.push_back(ws.f2group(p).dim());
    }
    return out;
}

namespace {

F2Vec flat_z2_formula(Workspace& ws, int p, const F2Vec& a) {
    const DeltaComplex& X = ws.X();
    F2Vec out = sq_cochain(X, 2, p, a);
    const TwistData& tw = ws.twist();
    if (tw.sigma1) out ^= cup_f2(X, 1, tw.sigma1->values, p + 1, sq_cochain(X, 1, p, a));
    if (tw.sigma2) out ^= cup_f2(X, 2, *tw.sigma2, p, a);
    return out;
}

}  // namespace

ClassF2 flat_d2_z2(Workspace& ws, const ClassF2& a) {
    ClassF2 out;
    out.degree = a.degree + 2;
    out.rep = flat_z2_formula(ws, a.degree, a.rep);
    return out;
}

ClassF2 flat_d3_u1_to_z2(Workspace& ws, const ClassQZ& a) {
    ClassF2 out;
    out.degree = a.degree + 3;
    if (a.divisible_part) {
        out.rep = F2Vec(ws.X().count(out.degree));
        return out;  // divisible classes lift through beta
    }
    std::vector<Int> b = bockstein_u1_cochain(ws.X(), a.degree, a.rep, ws.sigma1());
    out.rep = flat_z2_formula(ws, a.degree + 1, reduce_mod2_cochain(b));
    return out;
}

ClassQZ flat_d3_z2_to_u1(Workspace& ws, const ClassF2& a) {
    const DeltaComplex& X = ws.X();
    F2Vec z = sq_cochain(X, 2, a.degree, a.rep);
    if (ws.twist().sigma2) z ^= cup_f2(X, 2, *ws.twist().sigma2, a.degree, a.rep);
    ClassQZ out;
    out.degree = a.degree + 2;
    out.twisted = ws.sigma1() != nullptr;
    out.rep = j2_cochain(z);
    return out;
}

std::vector<Int> qmodz_finite_coords(Workspace& ws, const ClassQZ& a) {
    const ZCohGroup& next = ws.zgroup(a.degree + 1, true);
    if (a.divisible_part) return std::vector<Int>(next.shape().ngens(), 0);
    std::vector<Int> b = bockstein_u1_cochain(ws.X(), a.degree, a.rep, ws.sigma1());
    return next.coords(b);  // lands in the torsion part
}

LiftCheck geometric_d4_check(Workspace& ws, const RationalClass& G) {
    if (ws.sigma1() != nullptr && !ws.sigma1_trivial())
        throw UnsupportedError("form lifting with a degree-1 twist is not supported");
    if (G.degree != 4) throw ValidationError("geometric_d4_check: degree-4 input required");
    if (G.denominator != 1) throw ValidationError("geometric_d4_check: integral input required");
    const DeltaComplex& X = ws.X();
    if (static_cast<int>(G.rep.size()) != X.count(4))
        throw ValidationError("geometric_d4_check: representative has wrong length");
    for (const Int& v : apply_coboundary_z(X, 4, G.rep, nullptr))
        if (v != 0) throw ValidationError("geometric_d4_check: representative is not closed");

    const F2CohGroup& h4 = ws.f2group(4);
    const F2CohGroup& h2 = ws.f2group(2);
    std::vector<Int> target = h4.coords(X, reduce_mod2_cochain(G.rep));

    LiftCheck out;
    int k = h2.dim();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<Int> xc(k, 0);
        for (int j = 0; j < k; ++j)
            if (bits & (std::uint64_t{1} << j)) xc[j] = 1;
        F2Vec x = h2.rep_of(xc);
        F2Vec lhs = cup_f2(X, 2, x, 2, x);
        if (ws.twist().sigma2) lhs ^= cup_f2(X, 2, *ws.twist().sigma2, 2, x);
        out.searched.push_back(xc);
        if (h4.coords(X, lhs) == target) {
            out.lifts = true;
            out.witness_coords = xc;
            return out;
        }
    }
    out.lifts = false;
    return out;
}

SpinCheck check_twisted_spin(Workspace& ws, const ClassF2& B) {
    if (B.degree != 2) throw ValidationError("check_twisted_spin: degree-2 class required");
    const DeltaComplex& X = ws.X();
    if (B.rep.size() != X.count(2)) throw ValidationError("check_twisted_spin: wrong length");
    F2Vec b2 = cup_f2(X, 2, B.rep, 2, B.rep);  // Sq^2 B = B^2
    std::vector<Int> obstruction = bockstein_cochain(X, 4, b2, nullptr);
    SpinCheck out;
    const ZCohGroup& h5 = ws.zgroup(5, false);
    out.obstruction_group = h5.shape();
    out.obstruction_coords = h5.coords(obstruction);
    bool zero = true;
    for (const Int& c : out.obstruction_coords)
        if (c != 0) zero = false;
    if (!zero)
        out.verdict = SpinVerdict::Obstructed;
    else
        out.verdict = (X.dim() <= 7) ? SpinVerdict::Liftable : SpinVerdict::NecessaryOnly;
    return out;
}

LowDimKO low_dim_ko(Workspace& ws) {
    if (ws.X().dim() > 3) throw ValidationError("low_dim_ko: dimension <= 3 required");
    LowDimKO out;
    out.h1 = ws.f2group(1).shape();
    out.h2 = ws.f2group(2).shape();
    out.set_size_finite = out.h1.finite_order() * out.h2.finite_order();
    out.group_note =
        "the forgetful map to topological KO^0 is a group isomorphism in dimensions <= 3";
    return out;
}

RTheoryReport r_theory_groups(Workspace& ws) {
    RTheoryReport out;
    out.h3 = ws.zgroup(3, true).shape();
    out.h0_z2 = ws.f2group(0).shape();
    out.h1_z2 = ws.f2group(1).shape();
    const QmodZGroup& q = ws.qmodz(3, true);
    out.flat_h3 = {q.divisible_rank, q.finite};
    out.form_part = "ker(d3) in flat L-valued 3-forms (rank data only)";
    out.extension_resolved = false;
    return out;
}

bool wu_collapse_check(Workspace& ws) {
    const F2CohGroup& h2 = ws.f2group(2);
    const DeltaComplex& X = ws.X();
    int k = h2.dim();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<Int> xc(k, 0);
        for (int j = 0; j < k; ++j)
            if (bits & (std::uint64_t{1} << j)) xc[j] = 1;
        F2Vec x = h2.rep_of(xc);
        F2Vec lhs = cup_f2(X, 2, x, 2, x);
        if (ws.twist().sigma2) lhs ^= cup_f2(X, 2, *ws.twist().sigma2, 2, x);
        if (!ws.f2group(4).class_is_zero(X, lhs)) return false;
    }
    return true;
}

}  // namespace kocalc
