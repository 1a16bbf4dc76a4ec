#pragma once

#include "kocalc/cohomology.hpp"

#include <map>
#include <memory>

namespace kocalc {

// ---------------------------------------------------------------------------
// KO coefficients, 8-periodic: pi_q(KO) = Z, Z/2, Z/2, 0, Z, 0, 0, 0.
// Rows are indexed by qr in 0..7 standing for q === -qr (mod 8), so the
// cohomological row qr carries KO^{-qr}(pt). The Z/2 units act nontrivially
// exactly on the Z rows; the Z/2 rows keep untwisted coefficients.
// ---------------------------------------------------------------------------

enum class RowKind { Z, Z2, Zero };

struct KOCoefficients {
    static RowKind row(int qr) {
        int r = ((qr % 8) + 8) % 8;
        if (r == 0 || r == 4) return RowKind::Z;
        if (r == 1 || r == 2) return RowKind::Z2;
        return RowKind::Zero;
    }
    static bool sigma1_acts(int qr) { return row(qr) == RowKind::Z; }
};

// Associated-graded output along a total-degree line.
struct KOGroupReport {
    int degree = 0;
    bool reduced = false;
    std::vector<AbelianGroup> quotients;  // nonzero filtration quotients, ascending p
    Int finite_order = 1;
    int free_rank = 0;
    bool extension_ambiguous = false;
    bool undetermined = false;
};

class AHSSState {
public:
    // Builds the E2 page. Runs no differentials yet.
    explicit AHSSState(Workspace& ws);

    // Computes d2, E3, d3, E4, then flags entries that unidentified higher
    // differentials could still touch. Idempotent.
    void turn_pages();

    Workspace& workspace() const { return *ws_; }
    int dim() const { return dim_; }
    bool pages_turned() const { return turned_; }

    // Current (deepest computed) page data of an entry.
    AbelianGroup entry_shape(int p, int qr) const;
    AbelianGroup e2_shape(int p, int qr) const;
    bool entry_undetermined(int p, int qr) const;

    // Shapes at the moment each differential was evaluated.
    // d2: (p,0)->(p+2,1) on Z rows, (p,1)->(p+2,2) on Z/2 rows;
    // d3: (p,2)->(p+3,4), value taken in the E3 subquotient.
    const GroupHom* differential(int page, int p, int qr) const;

    // Cocycle-level differentials (exposed for tests and the CLI).
    // Inputs are representative cocycles; outputs live in the target groups.
    F2Vec d2_z_row_cochain(int p, const std::vector<Int>& rep) const;
    F2Vec d2_z2_row_cochain(int p, const F2Vec& rep) const;
    std::vector<Int> d3_z2_to_z_cochain(int p, const F2Vec& rep) const;

    // Class-level d2 on a Z-row class given by coordinates in E2^{p,0}.
    std::vector<Int> d2_z_row(int p, const std::vector<Int>& coords);
    std::vector<Int> d2_z2_row(int p, const std::vector<Int>& coords);
    // d3 on an E3 class of (p,2) given by E3 coordinates; requires
    // turn_pages() and returns coordinates in the E3 subquotient of (p+3,4).
    std::vector<Int> d3_z2_to_z(int p, const std::vector<Int>& e3_coords);

    KOGroupReport assemble_ko(int degree, bool reduced);

    // True when the twist is trivial at class level; column p=0 then splits
    // off by the retraction to the basepoint and its differentials vanish.
    bool basepoint_column_protected();

private:
    struct Entry {
        RowKind kind = RowKind::Zero;
        // subquotient state, in E2 coordinates
        std::vector<std::vector<Int>> gens;
        std::vector<std::vector<Int>> rels;
        std::shared_ptr<Subquotient> page;  // presentation of the current page
        bool undetermined = false;

        AbelianGroup e2_shape;
        std::vector<Int> e2_orders;  // ambient orders per E2 generator
    };

    Workspace* ws_;
    int dim_;
    bool turned_ = false;
    std::map<std::pair<int, int>, Entry> entries_;
    std::map<std::tuple<int, int, int>, GroupHom> diffs_;  // (page, p, qr)

    Entry& entry(int p, int qr);
    const Entry* find_entry(int p, int qr) const;
    void rebuild_page(Entry& e);
    std::vector<Int> e2_coords_f2(int p, const F2Vec& cocycle) const;
    std::vector<Int> e2_coords_z(int p, const std::vector<Int>& cocycle) const;
    F2Vec f2_rep_from_e2(int p, const std::vector<Int>& coords) const;
    std::vector<Int> z_rep_from_e2(int p, const std::vector<Int>& coords) const;
};

// Convenience wrapper: build, run, assemble.
KOGroupReport compute_ko(Workspace& ws, int degree, bool reduced);

}  // namespace kocalc
