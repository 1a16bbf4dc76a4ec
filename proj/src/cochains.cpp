#include "kocalc/cochains.hpp"

#include <functional>

namespace kocalc {

namespace {

inline int face_sign(const DeltaComplex& X, int p1, int s, int i, const SignCocycle* nu) {
    if (i == 0) {
        if (nu && p1 >= 1 && nu->value(X.edge01(p1, s))) return -1;
        return 1;
    }
    return (i % 2 == 0) ? 1 : -1;
}

}  // namespace

IntMatrix coboundary_z(const DeltaComplex& X, int p, const SignCocycle* nu) {
    IntMatrix D(X.count(p + 1), X.count(p));
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i)
            D.add_to(s, X.face(p + 1, s, i), face_sign(X, p + 1, s, i, nu));
    return D;
}

std::vector<Int> apply_coboundary_z(const DeltaComplex& X, int p, const std::vector<Int>& c,
                                    const SignCocycle* nu) {
    std::vector<Int> out(X.count(p + 1), 0);
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i) {
            const Int& v = c[X.face(p + 1, s, i)];
            if (v != 0) out[s] += face_sign(X, p + 1, s, i, nu) * v;
        }
    return out;
}

std::vector<Rat> apply_coboundary_q(const DeltaComplex& X, int p, const std::vector<Rat>& c,
                                    const SignCocycle* nu) {
    std::vector<Rat> out(X.count(p + 1), 0);
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i) {
            const Rat& v = c[X.face(p + 1, s, i)];
            if (v != 0) out[s] += Rat(face_sign(X, p + 1, s, i, nu)) * v;
        }
    return out;
}

F2Vec apply_coboundary_f2(const DeltaComplex& X, int p, const F2Vec& c) {
    F2Vec out(X.count(p + 1));
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i)
            if (c.get(X.face(p + 1, s, i))) out.flip(s);
    return out;
}

std::vector<F2Vec> coboundary_f2_columns(const DeltaComplex& X, int p) {
    std::vector<F2Vec> cols(X.count(p), F2Vec(X.count(p + 1)));
    for (int s = 0; s < X.count(p + 1); ++s)
        for (int i = 0; i <= p + 1; ++i) cols[X.face(p + 1, s, i)].flip(s);
    return cols;
}

F2Vec cup_f2(const DeltaComplex& X, int p, const F2Vec& a, int q, const F2Vec& b) {
    int n = p + q;
    F2Vec out(X.count(n));
    std::vector<int> front(p + 1), back(q + 1);
    for (int i = 0; i <= p; ++i) front[i] = i;
    for (int i = 0; i <= q; ++i) back[i] = p + i;
    for (int s = 0; s < X.count(n); ++s) {
        if (a.get(X.subface(n, s, front)) && b.get(X.subface(n, s, back))) out.flip(s);
    }
    return out;
}

// Steenrod's explicit formula on ordered simplices: choose 0 <= j_0 < ... <
// j_i <= n; the intervals [0,j_0], [j_0,j_1], ..., [j_i,n] alternate between
// the two arguments (overlapping at the j's); a term contributes when the
// interval unions hit the argument degrees.
F2Vec cup_i_f2(const DeltaComplex& X, int p, const F2Vec& a, int q, const F2Vec& b, int i) {
    int n = p + q - i;
    if (i < 0 || n < 0 || n > X.dim()) return F2Vec(std::max(0, n <= X.dim() && n >= 0 ? X.count(n) : 0));
    F2Vec out(X.count(n));
    std::vector<int> js(i + 1);
    std::function<void(int, int, int)> rec = [&](int idx, int start, int s) {
        if (idx == i + 1) {
            // chosen: js[0..i]; split positions
            std::vector<int> a_pos, b_pos;
            int prev = 0;
            for (int blk = 0; blk <= i + 1; ++blk) {
                int hi = (blk <= i) ? js[blk] : n;
                auto& dst = (blk % 2 == 0) ? a_pos : b_pos;
                for (int v = prev; v <= hi; ++v) dst.push_back(v);
                prev = hi;
            }
            if (static_cast<int>(a_pos.size()) == p + 1 && static_cast<int>(b_pos.size()) == q + 1) {
                if (a.get(X.subface(n, s, a_pos)) && b.get(X.subface(n, s, b_pos))) out.flip(s);
            }
            return;
        }
        for (int j = start; j <= n; ++j) {
            js[idx] = j;
            rec(idx + 1, j + 1, s);
        }
    };
    for (int s = 0; s < X.count(n); ++s) rec(0, 0, s);
    return out;
}

F2Vec sq_cochain(const DeltaComplex& X, int k, int p, const F2Vec& a) {
    if (k < 0) throw ValidationError("Sq^k: k >= 0 required");
    int i = p - k;
    int n = p + k;
    if (i < 0 || n > X.dim()) return F2Vec(n <= X.dim() ? X.count(n) : 0);
    return cup_i_f2(X, p, a, p, a, i);
}

namespace {

// Monodromy of nu along the ordered path v_0 -> v_1 -> ... -> v_p of the
// front face of s (product of the consecutive edge signs).
int front_transport(const DeltaComplex& X, int n, int s, int p, const SignCocycle* nu) {
    if (!nu || p == 0) return 1;
    int sign = 1;
    for (int k = 0; k + 1 <= p; ++k) {
        int edge = X.subface(n, s, {k, k + 1});
        if (nu->value(edge)) sign = -sign;
    }
    return sign;
}

}  // namespace

std::vector<Int> cup_z(const DeltaComplex& X, int p, const std::vector<Int>& a, int q,
                       const std::vector<Int>& b, const SignCocycle* nu_b) {
    int n = p + q;
    std::vector<Int> out(X.count(n), 0);
    std::vector<int> front(p + 1), back(q + 1);
    for (int i = 0; i <= p; ++i) front[i] = i;
    for (int i = 0; i <= q; ++i) back[i] = p + i;
    for (int s = 0; s < X.count(n); ++s) {
        const Int& av = a[X.subface(n, s, front)];
        if (av == 0) continue;
        const Int& bv = b[X.subface(n, s, back)];
        if (bv == 0) continue;
        out[s] = av * bv * front_transport(X, n, s, p, nu_b);
    }
    return out;
}

std::vector<Rat> cup_f2_q(const DeltaComplex& X, int p, const F2Vec& a, int q,
                          const std::vector<Rat>& b, const SignCocycle* nu_b) {
    int n = p + q;
    std::vector<Rat> out(X.count(n), 0);
    std::vector<int> front(p + 1), back(q + 1);
    for (int i = 0; i <= p; ++i) front[i] = i;
    for (int i = 0; i <= q; ++i) back[i] = p + i;
    for (int s = 0; s < X.count(n); ++s) {
        if (!a.get(X.subface(n, s, front))) continue;
        const Rat& bv = b[X.subface(n, s, back)];
        if (bv == 0) continue;
        out[s] = frac_mod1(Rat(front_transport(X, n, s, p, nu_b)) * bv);
    }
    return out;
}

std::vector<Int> bockstein_cochain(const DeltaComplex& X, int p, const F2Vec& z,
                                   const SignCocycle* nu) {
    std::vector<Int> lift(X.count(p), 0);
    for (int s = 0; s < X.count(p); ++s)
        if (z.get(s)) lift[s] = 1;
    std::vector<Int> d = apply_coboundary_z(X, p, lift, nu);
    for (auto& v : d) {
        if (v % 2 != 0) throw std::logic_error("bockstein: coboundary of lift is not even");
        v /= 2;
    }
    return d;
}

std::vector<Int> bockstein_u1_cochain(const DeltaComplex& X, int p, const std::vector<Rat>& z,
                                      const SignCocycle* nu) {
    std::vector<Rat> d = apply_coboundary_q(X, p, z, nu);
    std::vector<Int> out(d.size());
    for (std::size_t s = 0; s < d.size(); ++s) {
        if (denominator(d[s]) != 1)
            throw ValidationError("bockstein_u1: input is not a Q/Z cocycle");
        out[s] = numerator(d[s]);
    }
    return out;
}

F2Vec reduce_mod2_cochain(const std::vector<Int>& c) {
    F2Vec out(static_cast<int>(c.size()));
    for (std::size_t s = 0; s < c.size(); ++s)
        if (c[s] % 2 != 0) out.set(static_cast<int>(s), true);
    return out;
}

std::vector<Rat> j2_cochain(const F2Vec& c) {
    std::vector<Rat> out(c.size(), 0);
    for (int s = 0; s < c.size(); ++s)
        if (c.get(s)) out[s] = Rat(1, 2);
    return out;
}

}  // namespace kocalc
