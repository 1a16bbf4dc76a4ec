#include "kocalc/delta_complex.hpp"

#include <numeric>

namespace kocalc {

int DeltaComplex::add_simplex(int d, const std::vector<int>& faces) {
    if (d < 0) throw ValidationError("add_simplex: negative dimension");
    if (d > 0 && static_cast<int>(faces.size()) != d + 1)
        throw ValidationError("add_simplex: a d-simplex needs d+1 faces");
    while (static_cast<int>(counts_.size()) <= d) {
        counts_.push_back(0);
        faces_.emplace_back();
        labels_.emplace_back();
    }
    if (d > 0) {
        for (int f : faces)
            if (f < 0 || f >= counts_[d - 1]) throw ValidationError("add_simplex: face index out of range");
        faces_[d].push_back(faces);
    } else {
        faces_[d].push_back({});
    }
    labels_[d].push_back(std::string());
    return counts_[d]++;
}

int DeltaComplex::subface(int d, int s, const std::vector<int>& positions) const {
    int cur_d = d;
    int cur = s;
    for (int j = d; j >= 0; --j) {
        bool keep = false;
        for (int p : positions)
            if (p == j) keep = true;
        if (!keep) {
            cur = faces_[cur_d][cur][j];
            --cur_d;
        }
    }
    return cur;
}

std::vector<int> DeltaComplex::vertices_of(int d, int s) const {
    std::vector<int> vs(d + 1);
    for (int i = 0; i <= d; ++i) vs[i] = subface(d, s, {i});
    return vs;
}

Int DeltaComplex::euler_characteristic() const {
    Int chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0) ? Int(counts_[d]) : Int(-counts_[d]);
    return chi;
}

void DeltaComplex::validate() const {
    if (counts_.empty() || counts_[0] == 0) throw ValidationError("complex has no vertices");
    for (int d = 1; d <= dim(); ++d) {
        if (counts_[d] == 0) throw ValidationError("complex has an empty intermediate dimension");
        for (int s = 0; s < counts_[d]; ++s) {
            if (static_cast<int>(faces_[d][s].size()) != d + 1)
                throw ValidationError("simplex with wrong face count");
            for (int f : faces_[d][s])
                if (f < 0 || f >= counts_[d - 1]) throw ValidationError("face index out of range");
        }
    }
    // d_i d_j = d_{j-1} d_i for i < j, by direct enumeration.
    for (int d = 2; d <= dim(); ++d) {
        for (int s = 0; s < counts_[d]; ++s) {
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    int a = faces_[d - 1][faces_[d][s][j]][i];
                    int b = faces_[d - 1][faces_[d][s][i]][j - 1];
                    if (a != b) throw ValidationError("simplicial identity fails");
                }
            }
        }
    }
}

bool DeltaComplex::connected() const {
    int n = count(0);
    if (n == 0) return false;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (int e = 0; e < count(1); ++e) {
        int a = find(faces_[1][e][1]);  // v0
        int b = find(faces_[1][e][0]);  // v1
        if (a != b) comp[a] = b;
    }
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

void DeltaComplex::require_connected() const {
    if (!connected()) throw ValidationError("complex is not connected");
}

void DeltaComplex::set_label(int d, int s, const std::string& l) { labels_[d][s] = l; }

bool SignCocycle::is_cocycle(const DeltaComplex& X) const {
    if (values.size() != X.count(1)) return false;
    for (int t = 0; t < X.count(2); ++t) {
        bool sum = false;
        for (int i = 0; i <= 2; ++i)
            if (value(X.face(2, t, i))) sum = !sum;
        if (sum) return false;
    }
    return true;
}

void SignCocycle::require_valid(const DeltaComplex& X) const {
    if (!is_cocycle(X)) throw ValidationError("sign cochain is not a cocycle");
}

}  // namespace kocalc
