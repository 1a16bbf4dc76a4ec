#include "kocalc/builders.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace kocalc {

DeltaComplex build_point() {
    DeltaComplex X;
    X.add_simplex(0, {});
    return X;
}

namespace {

// Subsets of {0..n-1} of size k in lexicographic order.
void enum_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

DeltaComplex build_sphere(int n) {
    if (n < 0) throw ValidationError("build_sphere: n >= 0 required");
    int nv = n + 2;
    DeltaComplex X;
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    for (int d = 0; d <= n; ++d) {
        std::vector<std::vector<int>> subsets;
        enum_subsets(nv, d + 1, subsets);
        for (const auto& sub : subsets) {
            std::vector<int> faces;
            if (d > 0) {
                for (int j = 0; j <= d; ++j) {
                    std::vector<int> f = sub;
                    f.erase(f.begin() + j);
                    faces.push_back(index[d - 1].at(f));
                }
            }
            index[d][sub] = X.add_simplex(d, faces);
        }
    }
    return X;
}

CrossPolytope build_cross_polytope_sphere(int n) {
    if (n < 0) throw ValidationError("build_cross_polytope_sphere: n >= 0 required");
    int ncoord = n + 1;
    CrossPolytope out;
    // key: (coordinate subset, sign bits over the subset positions)
    std::vector<std::map<std::pair<std::vector<int>, std::uint32_t>, int>> index(n + 1);
    out.antipodal_map.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        std::vector<std::vector<int>> subsets;
        enum_subsets(ncoord, d + 1, subsets);
        for (const auto& sub : subsets) {
            for (std::uint32_t signs = 0; signs < (1u << (d + 1)); ++signs) {
                std::vector<int> faces;
                if (d > 0) {
                    for (int j = 0; j <= d; ++j) {
                        std::vector<int> fsub = sub;
                        fsub.erase(fsub.begin() + j);
                        std::uint32_t fsigns = (signs & ((1u << j) - 1)) | ((signs >> (j + 1)) << j);
                        faces.push_back(index[d - 1].at({fsub, fsigns}));
                    }
                }
                index[d][{sub, signs}] = out.complex.add_simplex(d, faces);
            }
        }
    }
    for (int d = 0; d <= n; ++d) {
        out.antipodal_map[d].resize(out.complex.count(d));
        for (const auto& [key, id] : index[d]) {
            std::uint32_t flipped = key.second ^ ((1u << (d + 1)) - 1);
            out.antipodal_map[d][id] = index[d].at({key.first, flipped});
        }
    }
    out.antipodal.vertex_map.resize(2 * ncoord);
    for (int i = 0; i < ncoord; ++i) {
        // vertex ids follow the sign-enumeration: +e_i then -e_i
        int plus = index[0].at({{i}, 0u});
        int minus = index[0].at({{i}, 1u});
        out.antipodal.vertex_map[plus] = minus;
        out.antipodal.vertex_map[minus] = plus;
    }
    return out;
}

namespace {

CircleWithInvolution make_circle(const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& vmap) {
    CircleWithInvolution out;
    for (int v = 0; v < 4; ++v) out.complex.add_simplex(0, {});
    for (auto [v0, v1] : edges) out.complex.add_simplex(1, {v1, v0});  // face i is opposite vertex i
    out.inv.vertex_map = vmap;
    auto m = induce_ordered(out.complex, out.inv);
    if (!m) throw std::logic_error("circle involution must be order-preserving");
    out.inv_map = *m;
    return out;
}

}  // namespace

CircleWithInvolution build_circle_rotation() {
    return make_circle({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 3, 0, 1});
}

CircleWithInvolution build_circle_conjugation() {
    return make_circle({{0, 1}, {1, 2}, {3, 2}, {0, 3}}, {0, 3, 2, 1});
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

namespace {

std::vector<int> cell_key(const ProductComplex::Cell& c) {
    std::vector<int> k{c.sx, c.sy};
    for (auto [a, b] : c.pts) {
        k.push_back(a);
        k.push_back(b);
    }
    return k;
}

// Face i of a product cell: drop path point i, then pull a factor face
// whenever a coordinate level disappears.
ProductComplex::Cell cell_face(const DeltaComplex& X, const DeltaComplex& Y,
                               const ProductComplex::Cell& c, int i) {
    ProductComplex::Cell f = c;
    int va = c.pts[i].first, vb = c.pts[i].second;
    f.pts.erase(f.pts.begin() + i);
    bool miss_a = true, miss_b = true;
    for (auto [a, b] : f.pts) {
        if (a == va) miss_a = false;
        if (b == vb) miss_b = false;
    }
    if (miss_a) {
        int p = c.pts.back().first;
        f.sx = X.face(p, c.sx, va);
        for (auto& [a, b] : f.pts)
            if (a > va) --a;
    }
    if (miss_b) {
        int q = c.pts.back().second;
        f.sy = Y.face(q, c.sy, vb);
        for (auto& [a, b] : f.pts)
            if (b > vb) --b;
    }
    return f;
}

void enum_paths(int p, int q, std::vector<std::vector<std::pair<int, int>>>& out) {
    std::vector<std::pair<int, int>> cur{{0, 0}};
    std::function<void()> rec = [&]() {
        auto [a, b] = cur.back();
        if (a == p && b == q) {
            out.push_back(cur);
            return;
        }
        if (a < p) {
            cur.emplace_back(a + 1, b);
            rec();
            cur.pop_back();
        }
        if (b < q) {
            cur.emplace_back(a, b + 1);
            rec();
            cur.pop_back();
        }
        if (a < p && b < q) {
            cur.emplace_back(a + 1, b + 1);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

ProductComplex product(const DeltaComplex& X, const DeltaComplex& Y) {
    X.validate();
    Y.validate();
    ProductComplex out;
    int dim = X.dim() + Y.dim();
    out.cells_.resize(dim + 1);
    out.index_.resize(dim + 1);

    for (int p = 0; p <= X.dim(); ++p) {
        for (int q = 0; q <= Y.dim(); ++q) {
            std::vector<std::vector<std::pair<int, int>>> paths;
            enum_paths(p, q, paths);
            for (int sx = 0; sx < X.count(p); ++sx)
                for (int sy = 0; sy < Y.count(q); ++sy)
                    for (const auto& pts : paths) {
                        ProductComplex::Cell c{sx, sy, pts};
                        int d = static_cast<int>(pts.size()) - 1;
                        out.cells_[d].push_back(c);
                        out.index_[d][cell_key(c)] = static_cast<int>(out.cells_[d].size()) - 1;
                    }
        }
    }
    // The map insert order above is by (p,q,sx,sy,path); re-emit simplices in
    // a single deterministic order per dimension: the stored cell order.
    for (int d = 0; d <= dim; ++d) {
        for (const auto& c : out.cells_[d]) {
            std::vector<int> faces;
            if (d > 0) {
                for (int i = 0; i <= d; ++i) {
                    auto f = cell_face(X, Y, c, i);
                    faces.push_back(out.index_[d - 1].at(cell_key(f)));
                }
            }
            out.complex.add_simplex(d, faces);
        }
    }
    return out;
}

DimMap ProductComplex::induce(const DimMap& fx, const DimMap& fy) const {
    DimMap m(cells_.size());
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        m[d].resize(cells_[d].size());
        for (std::size_t s = 0; s < cells_[d].size(); ++s) {
            Cell c = cells_[d][s];
            int p = c.pts.back().first, q = c.pts.back().second;
            c.sx = fx[p][c.sx];
            c.sy = fy[q][c.sy];
            m[d][s] = index_[d].at(cell_key(c));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Barycentric subdivision
// ---------------------------------------------------------------------------

namespace {

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::vector<int> mask_positions(std::uint32_t m) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (m & (1u << i)) out.push_back(i);
    return out;
}

// Renumber positions of sub through the positions of sup (sub must be a
// subset of sup).
std::uint32_t compress_mask(std::uint32_t sub, std::uint32_t sup) {
    std::uint32_t out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i) {
        if (sup & (1u << i)) {
            if (sub & (1u << i)) out |= (1u << j);
            ++j;
        }
    }
    return out;
}

// Strictly ascending chains S_0 < ... < S_{length-1} = full of nonempty
// subsets, built top-down.
void enum_chains(std::uint32_t full, int length, std::vector<std::vector<std::uint32_t>>& out) {
    std::vector<std::uint32_t> cur{full};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == length) {
            out.emplace_back(cur.rbegin(), cur.rend());
            return;
        }
        std::uint32_t top = cur.back();
        for (std::uint32_t s = (top - 1) & top; s; s = (s - 1) & top) {
            cur.push_back(s);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

SdComplex barycentric_subdivide(const DeltaComplex& X) {
    X.validate();
    SdComplex out;
    int dim = X.dim();
    out.cells_.resize(dim + 1);
    out.index_.resize(dim + 1);

    for (int d = 0; d <= dim; ++d) {
        for (int e = d; e <= dim; ++e) {
            std::uint32_t full = (1u << (e + 1)) - 1;
            std::vector<std::vector<std::uint32_t>> chains;
            enum_chains(full, d + 1, chains);
            std::sort(chains.begin(), chains.end());
            for (int s = 0; s < X.count(e); ++s)
                for (const auto& ch : chains) {
                    out.cells_[d].push_back({e, s, ch});
                    out.index_[d][{e, s, ch}] = static_cast<int>(out.cells_[d].size()) - 1;
                }
        }
    }
    for (int d = 0; d <= dim; ++d) {
        for (const auto& c : out.cells_[d]) {
            std::vector<int> faces;
            if (d > 0) {
                for (int i = 0; i <= d; ++i) {
                    if (i < d) {
                        std::vector<std::uint32_t> ch = c.flags;
                        ch.erase(ch.begin() + i);
                        faces.push_back(out.index_[d - 1].at({c.carrier_dim, c.carrier_id, ch}));
                    } else {
                        // collapse to the sub-carrier spanned by S_{d-1}
                        std::uint32_t sup = c.flags[d - 1];
                        int e2 = popcount(sup) - 1;
                        int carrier2 = X.subface(c.carrier_dim, c.carrier_id, mask_positions(sup));
                        std::vector<std::uint32_t> ch;
                        for (int j = 0; j < d; ++j) ch.push_back(compress_mask(c.flags[j], sup));
                        faces.push_back(out.index_[d - 1].at({e2, carrier2, ch}));
                    }
                }
            }
            out.sd.add_simplex(d, faces);
        }
    }

    // Last-vertex map sd -> X.
    out.last_vertex.image.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        out.last_vertex.image[d].resize(out.cells_[d].size());
        for (std::size_t s = 0; s < out.cells_[d].size(); ++s) {
            const auto& c = out.cells_[d][s];
            std::vector<int> pos;
            bool degenerate = false;
            for (const auto& m : c.flags) {
                int mx = 31 - __builtin_clz(m);
                if (!pos.empty() && pos.back() >= mx) {
                    degenerate = true;
                    break;
                }
                pos.push_back(mx);
            }
            out.last_vertex.image[d][s] =
                degenerate ? -1 : X.subface(c.carrier_dim, c.carrier_id, pos);
        }
    }
    return out;
}

DimMap SdComplex::induce(const DeltaComplex& X, const Involution& inv, const DimMap& setwise) const {
    DimMap m(cells_.size());
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        m[d].resize(cells_[d].size());
        for (std::size_t s = 0; s < cells_[d].size(); ++s) {
            const Cell& c = cells_[d][s];
            int e = c.carrier_dim;
            int t2 = setwise[e][c.carrier_id];
            std::vector<int> v1 = X.vertices_of(e, c.carrier_id);
            std::vector<int> v2 = X.vertices_of(e, t2);
            std::vector<int> perm(e + 1, -1);
            for (int i = 0; i <= e; ++i) {
                int target = inv.vertex_map[v1[i]];
                for (int j = 0; j <= e; ++j)
                    if (v2[j] == target) {
                        perm[i] = j;
                        break;
                    }
                if (perm[i] < 0)
                    throw ValidationError("involution does not permute simplex vertices");
            }
            std::vector<std::uint32_t> ch;
            for (auto mask : c.flags) {
                std::uint32_t out_mask = 0;
                for (int i = 0; i <= e; ++i)
                    if (mask & (1u << i)) out_mask |= (1u << perm[i]);
                ch.push_back(out_mask);
            }
            m[d][s] = index_[d].at({e, t2, ch});
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

std::optional<DimMap> induce_ordered(const DeltaComplex& X, const Involution& inv) {
    DimMap m(X.dim() + 1);
    std::map<std::vector<int>, int> lookup;
    for (int d = 0; d <= X.dim(); ++d) {
        lookup.clear();
        for (int s = 0; s < X.count(d); ++s) {
            auto vs = X.vertices_of(d, s);
            if (lookup.count(vs)) return std::nullopt;  // ambiguous tuples
            lookup[vs] = s;
        }
        m[d].resize(X.count(d));
        for (int s = 0; s < X.count(d); ++s) {
            auto vs = X.vertices_of(d, s);
            for (auto& v : vs) v = inv.vertex_map[v];
            auto it = lookup.find(vs);
            if (it == lookup.end()) return std::nullopt;  // not order-preserving
            m[d][s] = it->second;
        }
    }
    return m;
}

namespace {

std::optional<DimMap> induce_setwise(const DeltaComplex& X, const Involution& inv) {
    DimMap m(X.dim() + 1);
    std::map<std::vector<int>, int> lookup;
    for (int d = 0; d <= X.dim(); ++d) {
        lookup.clear();
        for (int s = 0; s < X.count(d); ++s) {
            auto vs = X.vertices_of(d, s);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return std::nullopt;
            if (lookup.count(vs)) return std::nullopt;
            lookup[vs] = s;
        }
        m[d].resize(X.count(d));
        for (int s = 0; s < X.count(d); ++s) {
            auto vs = X.vertices_of(d, s);
            for (auto& v : vs) v = inv.vertex_map[v];
            std::sort(vs.begin(), vs.end());
            auto it = lookup.find(vs);
            if (it == lookup.end()) return std::nullopt;
            m[d][s] = it->second;
        }
    }
    return m;
}

void require_free(const DimMap& m) {
    for (const auto& level : m)
        for (std::size_t s = 0; s < level.size(); ++s)
            if (level[s] == static_cast<int>(s))
                throw ValidationError("involution is not free: a simplex is mapped to itself");
}

}  // namespace

QuotientResult quotient_by_simplex_map(const DeltaComplex& X, const DimMap& m) {
    X.validate();
    X.require_connected();
    require_free(m);
    // sanity: equivariance with the face maps
    for (int d = 1; d <= X.dim(); ++d)
        for (int s = 0; s < X.count(d); ++s)
            for (int i = 0; i <= d; ++i)
                if (m[d - 1][X.face(d, s, i)] != X.face(d, m[d][s], i))
                    throw ValidationError("involution does not commute with face maps");

    QuotientResult out;
    out.cover = X;
    // Orbit representative: the smaller index. Quotient ids in rep order.
    std::vector<std::vector<int>> orbit_id(X.dim() + 1);
    std::vector<std::vector<int>> reps(X.dim() + 1);
    for (int d = 0; d <= X.dim(); ++d) {
        orbit_id[d].assign(X.count(d), -1);
        for (int s = 0; s < X.count(d); ++s) {
            if (orbit_id[d][s] >= 0) continue;
            int partner = m[d][s];
            int id = static_cast<int>(reps[d].size());
            reps[d].push_back(s);
            orbit_id[d][s] = id;
            orbit_id[d][partner] = id;
        }
    }
    for (int d = 0; d <= X.dim(); ++d) {
        for (int rep : reps[d]) {
            std::vector<int> faces;
            if (d > 0)
                for (int i = 0; i <= d; ++i) faces.push_back(orbit_id[d - 1][X.face(d, rep, i)]);
            out.quotient.add_simplex(d, faces);
        }
    }
    out.projection.image.resize(X.dim() + 1);
    for (int d = 0; d <= X.dim(); ++d) out.projection.image[d] = orbit_id[d];

    // Deck cocycle: 0 on an edge orbit iff the lift starting at the section
    // representative ends at the section representative.
    out.deck = SignCocycle::zero(out.quotient);
    for (int q = 0; q < out.quotient.count(1); ++q) {
        int e = reps[1][q];
        int v0 = X.face(1, e, 1);
        if (v0 != reps[0][orbit_id[0][v0]]) e = m[1][e];
        int v1 = X.face(1, e, 0);
        if (v1 != reps[0][orbit_id[0][v1]]) out.deck.values.set(q, true);
    }
    out.quotient.validate();
    out.deck.require_valid(out.quotient);
    return out;
}

QuotientResult quotient_by_involution(const DeltaComplex& X, const Involution& inv) {
    X.validate();
    inv.require_involution();
    for (std::size_t v = 0; v < inv.vertex_map.size(); ++v)
        if (inv.vertex_map[v] == static_cast<int>(v))
            throw ValidationError("involution has a fixed vertex");

    if (auto m = induce_ordered(X, inv)) {
        bool free = true;
        for (const auto& level : *m)
            for (std::size_t s = 0; s < level.size(); ++s)
                if (level[s] == static_cast<int>(s)) free = false;
        if (free) return quotient_by_simplex_map(X, *m);
    }

    auto setwise = induce_setwise(X, inv);
    if (!setwise)
        throw ValidationError("involution does not act on the complex by simplex permutations");
    require_free(*setwise);  // a setwise-fixed simplex forces an interior fixed point

    SdComplex sd = barycentric_subdivide(X);
    DimMap msd = sd.induce(X, inv, *setwise);
    QuotientResult out = quotient_by_simplex_map(sd.sd, msd);
    out.subdivisions = 1;
    return out;
}

RpResult build_rp(int n) {
    if (n < 1) throw ValidationError("build_rp: n >= 1 required");
    CrossPolytope cp = build_cross_polytope_sphere(n);
    RpResult out;
    out.cover_data = quotient_by_simplex_map(cp.complex, cp.antipodal_map);
    out.complex = out.cover_data.quotient;
    out.w1 = out.cover_data.deck;
    return out;
}

DeltaComplex build_torus(int n) {
    if (n < 1) throw ValidationError("build_torus: n >= 1 required");
    DeltaComplex cur = build_circle_rotation().complex;
    for (int i = 1; i < n; ++i) cur = product(cur, build_circle_rotation().complex).complex;
    return cur;
}

KleinResult build_klein(int n) {
    if (n < 2) throw ValidationError("build_klein: n >= 2 required");
    CircleWithInvolution conj = build_circle_conjugation();
    CircleWithInvolution rot = build_circle_rotation();

    DeltaComplex cur = conj.complex;
    DimMap cur_map = conj.inv_map;
    for (int i = 1; i < n - 1; ++i) {
        ProductComplex pc = product(cur, conj.complex);
        cur_map = pc.induce(cur_map, conj.inv_map);
        cur = pc.complex;
    }
    ProductComplex pc = product(cur, rot.complex);
    DimMap total = pc.induce(cur_map, rot.inv_map);

    KleinResult out;
    out.cover_data = quotient_by_simplex_map(pc.complex, total);
    out.complex = out.cover_data.quotient;
    out.sigma1 = out.cover_data.deck;
    return out;
}

}  // namespace kocalc
