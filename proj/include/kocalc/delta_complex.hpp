#pragma once

#include "kocalc/f2.hpp"
#include "kocalc/integers.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kocalc {

// Raised on invalid user input (bad complexes, non-cocycles, non-free
// actions, degree mismatches). The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for combinations the engine deliberately refuses to guess at
// (e.g. form lifting with a degree-1 twist). CLI exit code 3.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite ordered semi-simplicial complex ("Delta-complex"): sets of
// d-simplices with face maps, no degeneracies. Simplices may repeat vertex
// tuples (quotients produce parallel simplices); the face maps are the
// structure, vertex tuples are derived data.
class DeltaComplex {
public:
    DeltaComplex() = default;

    int dim() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int d) const { return (d < 0 || d > dim()) ? 0 : counts_[d]; }

    // faces_[d][s] lists the d+1 faces of d-simplex s (indices into dim d-1).
    int face(int d, int s, int i) const { return faces_[d][s][i]; }
    const std::vector<int>& faces_of(int d, int s) const { return faces_[d][s]; }

    // Append a simplex; returns its index. Faces must already exist.
    int add_simplex(int d, const std::vector<int>& faces);

    // Iterated face keeping the given ascending vertex positions.
    // subface(d, s, {0,1}) is the leading edge used by twisted coboundaries.
    int subface(int d, int s, const std::vector<int>& positions) const;

    // Vertex ids of a simplex, in simplex order.
    std::vector<int> vertices_of(int d, int s) const;

    int edge01(int d, int s) const { return subface(d, s, {0, 1}); }

    Int euler_characteristic() const;

    // Simplicial identities d_i d_j = d_{j-1} d_i (i<j), index ranges,
    // contiguous dimensions. Throws ValidationError on failure.
    void validate() const;

    bool connected() const;  // on the 1-skeleton
    void require_connected() const;

    const std::vector<std::string>& labels(int d) const { return labels_[d]; }
    void set_label(int d, int s, const std::string& l);

private:
    std::vector<int> counts_;
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<std::string>> labels_;
};

// Z/2-valued 1-cochain encoding the monodromy of a local system. Valid when
// it is a cocycle: on every 2-simplex the three edge values sum to 0 mod 2.
struct SignCocycle {
    F2Vec values;  // indexed by 1-simplices

    bool value(int edge) const { return values.get(edge); }
    bool is_cocycle(const DeltaComplex& X) const;
    void require_valid(const DeltaComplex& X) const;
    bool is_zero() const { return values.is_zero(); }

    static SignCocycle zero(const DeltaComplex& X) {
        SignCocycle c;
        c.values = F2Vec(X.count(1));
        return c;
    }
};

// Degreewise simplicial map, allowing degeneracy collapse: image(d, s) is the
// id of the image d-simplex or -1 when the image is degenerate. Cochain
// pullback treats collapsed simplices as zero.
struct SimplicialMap {
    std::vector<std::vector<int>> image;  // per source dimension

    int apply(int d, int s) const { return image[d][s]; }

    F2Vec pullback(const DeltaComplex& src, int d, const F2Vec& c) const {
        F2Vec out(src.count(d));
        for (int s = 0; s < src.count(d); ++s) {
            int t = image[d][s];
            if (t >= 0 && c.get(t)) out.flip(s);
        }
        return out;
    }

    std::vector<Int> pullback(const DeltaComplex& src, int d, const std::vector<Int>& c) const {
        std::vector<Int> out(src.count(d), 0);
        for (int s = 0; s < src.count(d); ++s) {
            int t = image[d][s];
            if (t >= 0) out[s] = c[t];
        }
        return out;
    }

    SignCocycle pullback_sign(const DeltaComplex& src, const SignCocycle& nu) const {
        SignCocycle out = SignCocycle::zero(src);
        for (int s = 0; s < src.count(1); ++s) {
            int t = image[1][s];
            if (t >= 0 && nu.value(t)) out.values.flip(s);
        }
        return out;
    }
};

// Vertex-level involution; simplex maps are derived (see builders).
struct Involution {
    std::vector<int> vertex_map;

    void require_involution() const {
        int n = static_cast<int>(vertex_map.size());
        for (int v = 0; v < n; ++v) {
            int w = vertex_map[v];
            if (w < 0 || w >= n || vertex_map[w] != v)
                throw ValidationError("involution: vertex map is not an order-2 permutation");
        }
    }
};

}  // namespace kocalc
