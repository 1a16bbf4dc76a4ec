#include "kocalc/builders.hpp"

#include "kocalc/cochains.hpp"
#include "kocalc/cohomology.hpp"
#include "kocalc/json_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kocalc;

TEST_CASE("spheres: boundary of simplex") {
    auto s1 = build_sphere(1);
    s1.validate();
    CHECK(s1.count(0) == 3);
    CHECK(s1.count(1) == 3);
    CHECK(s1.euler_characteristic() == 0);

    auto s2 = build_sphere(2);
    s2.validate();
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);
    CHECK(s2.euler_characteristic() == 2);

    auto s4 = build_sphere(4);
    s4.validate();
    const int want[5] = {6, 15, 20, 15, 6};  // binomials C(6, k+1)
    for (int d = 0; d <= 4; ++d) CHECK(s4.count(d) == want[d]);
    CHECK(s4.euler_characteristic() == 2);
    CHECK(s4.connected());
}

TEST_CASE("cross-polytope spheres carry a free order-preserving antipode") {
    for (int n = 1; n <= 4; ++n) {
        auto cp = build_cross_polytope_sphere(n);
        cp.complex.validate();
        CHECK(cp.complex.euler_characteristic() == ((n % 2 == 0) ? 2 : 0));
        for (int d = 0; d <= n; ++d)
            for (int s = 0; s < cp.complex.count(d); ++s) {
                CHECK(cp.antipodal_map[d][s] != s);
                CHECK(cp.antipodal_map[d][cp.antipodal_map[d][s]] == s);
            }
        // the vertex involution induces exactly this map
        auto m = induce_ordered(cp.complex, cp.antipodal);
        REQUIRE(m.has_value());
        CHECK(*m == cp.antipodal_map);
    }
}

TEST_CASE("projective spaces from the antipodal quotient") {
    for (int n = 1; n <= 5; ++n) {
        auto rp = build_rp(n);
        rp.complex.validate();
        rp.complex.require_connected();
        CHECK(rp.w1.is_cocycle(rp.complex));
        CHECK(rp.complex.euler_characteristic() == ((n % 2 == 0) ? 1 : 0));

        // mod-2 Poincare series 1 + t + ... + t^n
        for (int p = 0; p <= n; ++p) CHECK(oracle::mod2_betti(rp.complex, p) == 1);

        // the deck cocycle represents the generator of H^1(RP^n; Z/2)...
        Workspace ws(rp.complex, TwistData{});
        CHECK_FALSE(ws.f2group(1).class_is_zero(rp.complex, rp.w1.values));
        // ...and pulls back to a coboundary on the double cover
        const auto& proj = rp.cover_data.projection;
        F2Vec pulled = proj.pullback_sign(rp.cover_data.cover, rp.w1).values;
        Workspace wsc(rp.cover_data.cover, TwistData{});
        CHECK(wsc.f2group(1).class_is_zero(rp.cover_data.cover, pulled));
    }
}

TEST_CASE("quotient examples from the involution machinery") {
    SUBCASE("circle by half rotation: RP^1 = S^1 with nontrivial deck class") {
        auto c = build_circle_rotation();
        auto q = quotient_by_simplex_map(c.complex, c.inv_map);
        CHECK(q.quotient.count(0) == 2);
        CHECK(q.quotient.count(1) == 2);
        Workspace ws(q.quotient, TwistData{});
        CHECK(ws.zgroup(1, false).shape().free_rank == 1);  // still a circle
        CHECK_FALSE(ws.f2group(1).class_is_zero(q.quotient, q.deck.values));
    }
    SUBCASE("sphere by antipode: H^2(RP^2; Z) = Z/2") {
        auto rp = build_rp(2);
        Workspace ws(rp.complex, TwistData{});
        auto g = ws.zgroup(2, false).shape();
        CHECK(g.free_rank == 0);
        REQUIRE(g.torsion.size() == 1);
        CHECK(g.torsion[0] == 2);
    }
    SUBCASE("torus by the Klein involution: H^1(K_2; Z) = Z + Z/2") {
        auto k = build_klein(2);
        Workspace ws(k.complex, TwistData{});
        auto g = ws.zgroup(1, false).shape();
        CHECK(g.free_rank == 1);
        REQUIRE(g.torsion.size() == 1);
        CHECK(g.torsion[0] == 2);
    }
    SUBCASE("fixed vertices are rejected") {
        auto c = build_circle_conjugation();
        CHECK_THROWS_AS(quotient_by_involution(c.complex, c.inv), ValidationError);
    }
    SUBCASE("non-order-preserving free involutions go through one subdivision") {
        // zigzag square: edges (0,1),(1,2),(3,2),(3,0); rotation by two is
        // free but maps (1,2) to the reversed tuple (3,0)
        DeltaComplex X;
        for (int v = 0; v < 4; ++v) X.add_simplex(0, {});
        X.add_simplex(1, {1, 0});
        X.add_simplex(1, {2, 1});
        X.add_simplex(1, {2, 3});
        X.add_simplex(1, {0, 3});
        Involution inv{{2, 3, 0, 1}};
        CHECK_FALSE(induce_ordered(X, inv).has_value());
        auto q = quotient_by_involution(X, inv);
        CHECK(q.subdivisions == 1);
        Workspace ws(q.quotient, TwistData{});
        CHECK(ws.zgroup(1, false).shape().free_rank == 1);
        CHECK_FALSE(ws.f2group(1).class_is_zero(q.quotient, q.deck.values));
    }
}

TEST_CASE("products: Euler characteristic and Betti numbers") {
    auto s1 = build_circle_rotation().complex;
    SUBCASE("S^1 x S^1") {
        auto t2 = product(s1, s1).complex;
        t2.validate();
        CHECK(t2.euler_characteristic() == 0);
        CHECK(oracle::mod2_betti(t2, 1) == 2);
    }
    SUBCASE("S^1 x S^2") {
        auto x = product(s1, build_sphere(2)).complex;
        x.validate();
        CHECK(x.euler_characteristic() == 0);
        Workspace ws(x, TwistData{});
        for (int p = 0; p <= 3; ++p) {
            CHECK(ws.rational_rank(p, false) == 1);  // b-vector (1,1,1,1)
        }
    }
    SUBCASE("S^1 x RP^2") {
        auto x = product(s1, build_rp(2).complex).complex;
        x.validate();
        CHECK(x.euler_characteristic() == 0);
        const int want[4] = {1, 2, 2, 1};
        for (int p = 0; p <= 3; ++p) CHECK(oracle::mod2_betti(x, p) == want[p]);
    }
    SUBCASE("chi is multiplicative") {
        auto a = build_sphere(2);
        auto b = build_rp(2).complex;
        CHECK(product(a, b).complex.euler_characteristic() ==
              a.euler_characteristic() * b.euler_characteristic());
    }
}

TEST_CASE("barycentric subdivision") {
    SUBCASE("a single edge becomes a path with 2 edges and 3 vertices") {
        DeltaComplex X;
        X.add_simplex(0, {});
        X.add_simplex(0, {});
        X.add_simplex(1, {1, 0});
        auto sd = barycentric_subdivide(X);
        CHECK(sd.sd.count(0) == 3);
        CHECK(sd.sd.count(1) == 2);
    }
    SUBCASE("boundary of a triangle becomes a hexagon") {
        auto sd = barycentric_subdivide(build_sphere(1));
        CHECK(sd.sd.count(0) == 6);
        CHECK(sd.sd.count(1) == 6);
    }
    SUBCASE("cohomology of RP^2 is preserved") {
        auto rp = build_rp(2);
        auto sd = barycentric_subdivide(rp.complex);
        sd.sd.validate();
        for (int p = 0; p <= 2; ++p)
            CHECK(oracle::mod2_betti(sd.sd, p) == oracle::mod2_betti(rp.complex, p));
        Workspace a(rp.complex, TwistData{}), b(sd.sd, TwistData{});
        for (int p = 0; p <= 2; ++p) {
            CHECK(a.zgroup(p, false).shape() == b.zgroup(p, false).shape());
        }
        // the last-vertex transport is a chain map inducing an isomorphism
        auto hom = induced_map_f2(b.f2group(1), a.f2group(1), sd.sd, rp.complex, sd.last_vertex, 1);
        CHECK_FALSE(b.f2group(1).class_is_zero(sd.sd,
                                               sd.last_vertex.pullback(sd.sd, 1, rp.w1.values)));
        CHECK(hom.respects_orders());
    }
}

TEST_CASE("Klein bottles") {
    auto k2 = build_klein(2);
    k2.complex.validate();
    CHECK(k2.complex.euler_characteristic() == 0);
    CHECK(k2.sigma1.is_cocycle(k2.complex));
    const int betti2[3] = {1, 2, 1};
    for (int p = 0; p <= 2; ++p) CHECK(oracle::mod2_betti(k2.complex, p) == betti2[p]);

    auto k3 = build_klein(3);
    k3.complex.validate();
    // H^i(K_3; Z/2) = (Z/2)^(3 choose i)
    const int betti3[4] = {1, 3, 3, 1};
    for (int p = 0; p <= 3; ++p) CHECK(oracle::mod2_betti(k3.complex, p) == betti3[p]);

    // sigma1 is nontrivial with square zero in cohomology
    Workspace ws(k3.complex, TwistData{});
    CHECK_FALSE(ws.f2group(1).class_is_zero(k3.complex, k3.sigma1.values));
    F2Vec sq = cup_f2(k3.complex, 1, k3.sigma1.values, 1, k3.sigma1.values);
    CHECK(ws.f2group(2).class_is_zero(k3.complex, sq));

    CHECK_THROWS_AS(build_klein(1), ValidationError);
}

TEST_CASE("Klein bottles: total mod-2 Betti number is 2^n") {
    for (int n = 2; n <= 4; ++n) {
        auto kn = build_klein(n);
        long total = 0;
        for (int p = 0; p <= n; ++p) total += oracle::mod2_betti(kn.complex, p);
        CHECK(total == (1l << n));
    }
}

TEST_CASE("complex JSON serialization is deterministic and round-trips") {
    auto rp = build_rp(2);
    json j1 = complex_to_json(rp.complex);
    json j2 = complex_to_json(build_rp(2).complex);
    CHECK(j1.dump() == j2.dump());
    DeltaComplex back = complex_from_json(j1);
    CHECK(complex_to_json(back).dump() == j1.dump());

    json c1 = sign_cocycle_to_json(rp.w1);
    SignCocycle w1b = sign_cocycle_from_json(c1, back);
    CHECK(sign_cocycle_to_json(w1b).dump() == c1.dump());
}

TEST_CASE("disconnected complexes are rejected by computations") {
    auto s0 = build_sphere(0);
    CHECK(s0.count(0) == 2);
    CHECK(s0.euler_characteristic() == 2);
    CHECK_FALSE(s0.connected());
    CHECK_THROWS_AS(Workspace(s0, TwistData{}), ValidationError);
}
