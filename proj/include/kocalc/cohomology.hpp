#pragma once

#include "kocalc/cochains.hpp"
#include "kocalc/f2.hpp"
#include "kocalc/smith.hpp"
#include "kocalc/zmodule.hpp"

#include <map>
#include <memory>
#include <optional>

namespace kocalc {

enum class Coeff { Z, Z2, QmodZ };

// (Twisted) integral cohomology H^p with a cocycle basis and a coordinate
// solver. Generators: torsion first (ascending order), then free.
class ZCohGroup {
public:
    ZCohGroup() = default;
    ZCohGroup(const DeltaComplex& X, int p, const SignCocycle* nu);

    const AbelianGroup& shape() const { return shape_; }
    int degree() const { return degree_; }
    const std::vector<std::vector<Int>>& reps() const { return reps_; }

    // Coordinates of a cocycle; throws ValidationError if not a cocycle.
    std::vector<Int> coords(const std::vector<Int>& cocycle) const;
    std::vector<Int> rep_of(const std::vector<Int>& coords) const;
    bool class_is_zero(const std::vector<Int>& cocycle) const;

    // Solve delta c = t for t in the image of the incoming coboundary
    // (used for Bockstein representatives).
    std::vector<Int> preimage_of_image(const std::vector<Int>& target) const;

private:
    int degree_ = 0;
    int n_ = 0;  // cochain dimension
    AbelianGroup shape_;
    std::vector<std::vector<Int>> reps_;
    // outgoing coboundary SNF data (kernel solver)
    IntMatrix Vinv_;
    int rankD_ = 0;
    // incoming coboundary SNF data (image solver)
    IntMatrix Uin_, Vin_;
    std::vector<Int> din_;
    int rank_in_ = 0;
    // quotient presentation
    IntMatrix Uq_;
    std::vector<Int> qdiv_;
    std::vector<int> kept_;
};

// Mod-2 cohomology with cocycle basis; the group is (Z/2)^dim presented with
// torsion = [2,...,2].
class F2CohGroup {
public:
    F2CohGroup() = default;
    F2CohGroup(const DeltaComplex& X, int p);

    AbelianGroup shape() const {
        AbelianGroup g;
        g.torsion.assign(dim_, Int(2));
        return g;
    }
    int degree() const { return degree_; }
    int dim() const { return dim_; }
    const std::vector<F2Vec>& reps() const { return reps_; }

    std::vector<Int> coords(const DeltaComplex& X, const F2Vec& cocycle) const;
    F2Vec rep_of(const std::vector<Int>& coords) const;
    bool class_is_zero(const DeltaComplex& X, const F2Vec& cocycle) const;

private:
    int degree_ = 0;
    int dim_ = 0;
    std::vector<F2Vec> reps_;
    F2Solver solver_{0};
    std::vector<int> rep_rows_;  // solver row index of each basis rep
};

// H^p(X; L/Z) in the computable presentation: a divisible part recorded by
// its rank (the twisted rational Betti number) and a finite part isomorphic
// to the torsion of H^{p+1}(X; Z_nu), with Q/Z cochain representatives.
struct QmodZGroup {
    int degree = 0;
    int divisible_rank = 0;
    AbelianGroup finite;
    std::vector<std::vector<Rat>> reps;  // finite-part generators
};

struct TwistData {
    std::optional<SignCocycle> sigma1;
    std::optional<F2Vec> sigma2;

    void require_valid(const DeltaComplex& X) const;
    const SignCocycle* sigma1_ptr() const { return sigma1 ? &*sigma1 : nullptr; }
};

// Per-space cache of coboundary SNFs and cohomology groups.
class Workspace {
public:
    Workspace(const DeltaComplex& X, TwistData tw);

    const DeltaComplex& X() const { return *X_; }
    const TwistData& twist() const { return tw_; }
    const SignCocycle* sigma1() const { return tw_.sigma1_ptr(); }

    const ZCohGroup& zgroup(int p, bool twisted);
    const F2CohGroup& f2group(int p);
    const QmodZGroup& qmodz(int p, bool twisted);
    int rational_rank(int p, bool twisted);

    // Class-level triviality of the twist data.
    bool sigma1_trivial();
    bool sigma2_trivial();

private:
    const DeltaComplex* X_;
    TwistData tw_;
    std::map<std::pair<int, bool>, ZCohGroup> zgroups_;
    std::map<int, F2CohGroup> f2groups_;
    std::map<std::pair<int, bool>, QmodZGroup> qgroups_;
    std::map<std::pair<int, bool>, SmithResult> snfs_;
    std::optional<bool> s1_trivial_, s2_trivial_;

    const SmithResult& snf(int p, bool twisted);
    friend struct QmodZBuilder;
};

// Summary of the spec-level `cohomology` operation.
struct CohomologySummary {
    Coeff coeff;
    int degree;
    AbelianGroup shape;     // for QmodZ: the finite part
    int divisible_rank = 0; // QmodZ only
};

CohomologySummary cohomology(Workspace& ws, Coeff coeff, bool twisted, int p);

// Induced map on cohomology from a degreewise cochain map, with the
// chain-map condition verified on basis cochains (source degrees p-1 and p).
GroupHom induced_map_z(const ZCohGroup& src_p, const ZCohGroup& tgt_p, const DeltaComplex& srcX,
                       const DeltaComplex& tgtX, const SimplicialMap& f, int p,
                       const SignCocycle* nu_src, const SignCocycle* nu_tgt);
GroupHom induced_map_f2(const F2CohGroup& src_p, const F2CohGroup& tgt_p, const DeltaComplex& srcX,
                        const DeltaComplex& tgtX, const SimplicialMap& f, int p);

}  // namespace kocalc
