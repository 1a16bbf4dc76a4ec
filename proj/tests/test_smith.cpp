#include "kocalc/smith.hpp"

#include "kocalc/builders.hpp"
#include "kocalc/cochains.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kocalc;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int m = static_cast<int>(rows.size());
    int n = m ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i][j]) a.set(i, j, rows[i][j]);
    return a;
}

void check_transforms(const IntMatrix& A, const SmithResult& r) {
    CHECK(r.U.mul(r.Uinv) == IntMatrix::identity(A.rows()));
    CHECK(r.V.mul(r.Vinv) == IntMatrix::identity(A.cols()));
    CHECK(r.U.mul(A).mul(r.V) == r.S);
    for (std::size_t i = 0; i + 1 < r.divisors.size(); ++i) {
        CHECK(r.divisors[i] > 0);
        CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
    }
    // off-diagonal entries of S vanish
    for (int i = 0; i < r.S.rows(); ++i)
        for (const auto& [j, v] : r.S.row(i)) CHECK(i == j);
}

// deterministic small LCG for reproducible matrices
struct Lcg {
    std::uint64_t s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_CASE("smith normal form: diag(2,3) normalizes to diag(1,6)") {
    auto A = from_rows({{2, 0}, {0, 3}});
    auto r = smith_normal_form(A);
    check_transforms(A, r);
    REQUIRE(r.divisors.size() == 2);
    CHECK(r.divisors[0] == 1);
    CHECK(r.divisors[1] == 6);
}

TEST_CASE("smith normal form: zero matrix") {
    IntMatrix A(3, 2);
    auto r = smith_normal_form(A);
    CHECK(r.rank == 0);
    CHECK(r.U == IntMatrix::identity(3));
    CHECK(r.V == IntMatrix::identity(2));
    CHECK(r.S == A);
}

TEST_CASE("smith normal form: delta^1 of RP^2 has exactly one divisor 2") {
    // Forces H^2(RP^2; Z) = Z/2. Checked on the cross-polytope quotient and
    // on the classical 6-vertex triangulation.
    auto check = [](const DeltaComplex& X) {
        auto r = smith_normal_form(coboundary_z(X, 1, nullptr));
        int twos = 0;
        for (const Int& d : r.divisors) {
            if (d == 2) ++twos;
            if (d != 1 && d != 2) FAIL("unexpected divisor");
        }
        CHECK(twos == 1);
    };
    check(build_rp(2).complex);

    // 6-vertex minimal triangulation (every pair of vertices is an edge).
    DeltaComplex m;
    for (int v = 0; v < 6; ++v) m.add_simplex(0, {});
    std::map<std::pair<int, int>, int> edge;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) edge[{a, b}] = m.add_simplex(1, {b, a});
    const int tris[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                             {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    for (const auto& t : tris)
        m.add_simplex(2, {edge.at({t[1], t[2]}), edge.at({t[0], t[2]}), edge.at({t[0], t[1]})});
    m.validate();
    CHECK(m.euler_characteristic() == 1);
    check(m);
}

TEST_CASE("smith normal form: random sparse matrices vs dense oracle") {
    Lcg rng{20240817};
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.next(1, 7), cols = rng.next(1, 7);
        IntMatrix A(rows, cols);
        std::vector<std::vector<Int>> dense(rows, std::vector<Int>(cols, 0));
        int fill = rng.next(0, rows * cols);
        for (int k = 0; k < fill; ++k) {
            int i = rng.next(0, rows - 1), j = rng.next(0, cols - 1);
            int v = rng.next(-9, 9);
            A.set(i, j, v);
            dense[i][j] = v;
        }
        auto r = smith_normal_form(A);
        check_transforms(A, r);
        auto want = oracle::dense_smith_divisors(dense);
        std::vector<Int> got;
        for (const Int& d : r.divisors)
            if (d > 1) got.push_back(d);
        CHECK(got == want);
    }
}
