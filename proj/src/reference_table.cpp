#include "kocalc/reference_table.hpp"

namespace kocalc {

namespace {

AbelianGroup cyclic_pow2(long e) {
    AbelianGroup g;
    if (e > 0) {
        Int d = 1;
        for (long k = 0; k < e; ++k) d *= 2;
        g.torsion.push_back(d);
    }
    return g;
}

AbelianGroup z2s(int count) {
    AbelianGroup g;
    g.torsion.assign(count, Int(2));
    return g;
}

AbelianGroup z_plus_z2() {
    AbelianGroup g;
    g.free_rank = 1;
    g.torsion.push_back(2);
    return g;
}

AbelianGroup zfree() {
    AbelianGroup g;
    g.free_rank = 1;
    return g;
}

}  // namespace

AbelianGroup table_lookup_printed(int n, int i) {
    if (n < 0) throw ValidationError("table_lookup: n >= 0 required");
    long r = n / 8;
    int s = n % 8;
    int im = ((i % 8) + 8) % 8;
    switch (im) {
        case 0: {
            static const int off[8] = {0, 1, 2, 2, 3, 3, 3, 3};
            return cyclic_pow2(4 * r + off[s]);
        }
        case 1:
            return (s == 3 || s == 7) ? z_plus_z2() : z2s(1);
        case 2:
            if (s == 0 || s == 6) return z2s(2);
            if (s == 7) return z2s(3);
            return z2s(1);
        case 3:
            if (s == 0 || s == 6) return z2s(1);
            if (s == 1 || s == 5) return zfree();
            if (s == 7) return z2s(2);
            return AbelianGroup{};
        case 4: {
            static const int off[8] = {0, 0, 0, 0, 1, 2, 3, 3};
            return cyclic_pow2(4 * r + off[s]);
        }
        case 5:
            return (s == 3 || s == 7) ? zfree() : AbelianGroup{};
        case 6:
            if (s == 3) return z2s(2);
            if (s == 2 || s == 4) return z2s(1);
            return AbelianGroup{};
        case 7:
            if (s == 1 || s == 5) return zfree();
            if (s == 3) return z2s(2);
            if (s == 2 || s == 4) return z2s(1);
            return AbelianGroup{};
    }
    return AbelianGroup{};
}

AbelianGroup table_lookup(int n, int i) {
    if (n == 0) return AbelianGroup{};
    if (n == 1) {
        // RP^1 = S^1: reduced KO^{-i}(S^1) = KO^{-i-1}(pt).
        int q = (i + 1) % 8;
        switch (q) {
            case 1:
            case 2:
                return z2s(1);
            case 0:
            case 4:
                return zfree();
            default:
                return AbelianGroup{};
        }
    }
    return table_lookup_printed(n, i);
}

ThomCheck twisted_thom_check(int n, int i) {
    ThomCheck out;
    out.n = n;
    out.i = i;
    RpResult rp = build_rp(n);
    TwistData tw;
    tw.sigma1 = rp.w1;
    Workspace ws(rp.complex, tw);
    out.engine = compute_ko(ws, -i, true);
    out.reference = table_lookup(n + 1, ((i - 1) % 8 + 8) % 8);
    out.inconclusive = out.engine.undetermined;
    out.consistent = !out.inconclusive &&
                     out.engine.finite_order == out.reference.finite_order() &&
                     out.engine.free_rank == out.reference.free_rank;
    return out;
}

KleinCheck klein_recursion_check(int n, int i, bool twisted) {
    if (n < 2) throw ValidationError("klein_recursion_check: n >= 2 required");
    KleinCheck out;
    out.n = n;
    out.i = i;
    out.twisted = twisted;

    KleinResult kn = build_klein(n);
    TwistData tw;
    if (twisted) tw.sigma1 = kn.sigma1;
    Workspace ws(kn.complex, tw);
    out.lhs = compute_ko(ws, i, true);
    out.inconclusive = out.lhs.undetermined;

    auto accumulate = [&](Int order, int rank) {
        out.rhs_order *= order;
        out.rhs_rank += rank;
    };
    if (n == 2) {
        // Base cases against the reference table:
        //   KO~^i(K_2)          = KO~^i(RP^1) + KO~^i(RP^2)
        //   KO~^i_{sigma1}(K_2) = KO~^{i+1}(RP^2) + KO~^i(RP^2)
        int j = ((-i) % 8 + 8) % 8;  // KO~^i = KO~^{-j}
        if (!twisted) {
            AbelianGroup a = table_lookup(1, j), b = table_lookup(2, j);
            accumulate(a.finite_order(), a.free_rank);
            accumulate(b.finite_order(), b.free_rank);
        } else {
            int j1 = ((-(i + 1)) % 8 + 8) % 8;
            AbelianGroup a = table_lookup(2, j1), b = table_lookup(2, j);
            accumulate(a.finite_order(), a.free_rank);
            accumulate(b.finite_order(), b.free_rank);
        }
    } else {
        KleinResult km = build_klein(n - 1);
        TwistData tw_twisted;
        tw_twisted.sigma1 = km.sigma1;
        Workspace ws_tw(km.complex, tw_twisted);
        KOGroupReport right = compute_ko(ws_tw, i, true);
        out.inconclusive = out.inconclusive || right.undetermined;
        accumulate(right.finite_order, right.free_rank);
        if (!twisted) {
            Workspace ws_un(km.complex, TwistData{});
            KOGroupReport left = compute_ko(ws_un, i, true);
            out.inconclusive = out.inconclusive || left.undetermined;
            accumulate(left.finite_order, left.free_rank);
        } else {
            accumulate(right.finite_order, right.free_rank);
        }
    }
    out.consistent = !out.inconclusive && out.lhs.finite_order == out.rhs_order &&
                     out.lhs.free_rank == out.rhs_rank;
    return out;
}

std::vector<TableCell> table_matrix(int n_max) {
    std::vector<TableCell> out;
    for (int n = 1; n <= n_max; ++n) {
        RpResult rp = build_rp(n);
        Workspace ws(rp.complex, TwistData{});
        AHSSState st(ws);
        st.turn_pages();
        for (int i = 0; i < 8; ++i) {
            TableCell cell;
            cell.n = n;
            cell.i = i;
            cell.engine = st.assemble_ko(-i, true);
            cell.reference = table_lookup(n, i);
            cell.resolved = !cell.engine.undetermined;
            cell.match = cell.engine.finite_order == cell.reference.finite_order() &&
                         cell.engine.free_rank == cell.reference.free_rank;
            out.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace kocalc
