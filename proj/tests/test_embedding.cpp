#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "bipoly.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "outerplanar.hpp"
#include "rng.hpp"

using namespace trilength;

namespace {

constexpr Label F = Label::Fwd;
constexpr Label L = Label::Left;
constexpr Label R = Label::Right;

const BiPoly kZero = BiPoly::zero();
const BiPoly kOne = BiPoly::constant(1);
const BiPoly kX0 = BiPoly::variable(0);

BiPoly mono(uint32_t e0, uint32_t e1, int64_t k) {
    return poly_mul_monomial(BiPoly::constant(1), Monomial{e0, e1}, k);
}

RhombusState walk(const Address& a) {
    RhombusState s = rhombus_root();
    for (Label l : a) s = rhombus_child(s, l);
    return s;
}

} // namespace

TEST_CASE("root pose and its corners") {
    RhombusState s = rhombus_root();
    CHECK(s.z0 == kZero);
    CHECK(s.z1 == kOne);
    CHECK(s.ty == 0);
    CHECK(s.fwd_run == 0);
    CHECK(rhombus_direction(s) == kOne);
    CHECK(rhombus_corner2(s) == kX0);
    CHECK(rhombus_corner3(s) == poly_add(kOne, kX0));
}

TEST_CASE("published corner labels along the Fwd/Left chain") {
    // One Fwd step: far corners 2x0 and 2x0 + 1.
    RhombusState f = walk({F});
    CHECK(f.z0 == kX0);
    CHECK(f.z1 == poly_add(kOne, kX0));
    CHECK(f.ty == 0);
    CHECK(f.fwd_run == 1);
    CHECK(rhombus_corner2(f) == mono(1, 0, 2));
    CHECK(rhombus_corner3(f) == poly_add(kOne, mono(1, 0, 2)));

    // Turning Left after the odd run flips the open angle to x1:
    // far corners x0 + x0*x1 and 2x0 + x0*x1.
    RhombusState fl = walk({F, L});
    CHECK(fl.z0 == kX0);
    CHECK(fl.z1 == mono(1, 0, 2));
    CHECK(fl.ty == 1);
    CHECK(fl.fwd_run == 0);
    CHECK(rhombus_corner2(fl) == poly_add(kX0, mono(1, 1, 1)));
    CHECK(rhombus_corner3(fl) == poly_add(mono(1, 0, 2), mono(1, 1, 1)));

    // One more Fwd: the far base corner reaches 2x0 + 2x0*x1.
    RhombusState flf = walk({F, L, F});
    CHECK(rhombus_corner3(flf) ==
          poly_add(mono(1, 0, 2), mono(1, 1, 2)));
}

TEST_CASE("published base positions of the two example addresses") {
    CHECK(walk({L, F, L, L}).z0 == mono(2, 0, 1));        // x0^2
    CHECK(psi_closed_form(qr_encode({L, F, L, L})) == mono(2, 0, 1));
    CHECK(walk({L, F, F}).z0 == mono(2, 0, 2));           // 2x0^2
    CHECK(psi_closed_form(qr_encode({L, F, F})) == mono(2, 0, 2));
}

TEST_CASE("base direction stays a unit monomial everywhere") {
    enumerate_addresses(5, [&](const Address& a) {
        RhombusState s = walk(a);
        BiPoly p = rhombus_direction(s);
        REQUIRE(p.terms.size() == 1);
        REQUIRE(p.terms[0].coeff == 1);
    });
}

TEST_CASE("closed form equals the recursive walk, length <= 6") {
    enumerate_addresses(6, [&](const Address& a) {
        RhombusState s = walk(a);
        QREncoding e = qr_encode(a);
        REQUIRE(psi_closed_form(e) == s.z0);
        // Far corners through the closed form: v2 is the base of the
        // Left-then-Right grandchild, v3 of the Right-then-Right one.
        Address v2a = a, v3a = a;
        v2a.insert(v2a.end(), {L, R});
        v3a.insert(v3a.end(), {R, R});
        REQUIRE(psi_closed_form(qr_encode(v2a)) == rhombus_corner2(s));
        REQUIRE(psi_closed_form(qr_encode(v3a)) == rhombus_corner3(s));
    });
}

TEST_CASE("embed_tstar at depth zero is the unit rhombus") {
    Placement p = embed_tstar(0);
    REQUIRE(p.positions.size() == 4);
    std::set<BiPoly> got(p.positions.begin(), p.positions.end());
    std::set<BiPoly> want{kZero, kOne, kX0, poly_add(kOne, kX0)};
    CHECK(got == want);
}

TEST_CASE("portion sizes follow the trinary-tree count") {
    // K nodes at depth d; 2K + 2 distinct corners; 4K + 1 edges.
    long k = 1;
    for (int d = 0; d <= 4; ++d) {
        TstarPortion t = embed_tstar_portion(d);
        CHECK(t.graph.n == 2 * k + 2);
        CHECK(static_cast<long>(t.graph.edges.size()) == 4 * k + 1);
        CHECK(t.placement.positions.size() == t.graph.n);
        k = 3 * k + 1;
    }
    CHECK_THROWS_AS(embed_tstar_portion(11), Error);
    CHECK_THROWS_AS(embed_tstar_portion(-1), Error);
}

TEST_CASE("portion placements are injective") {
    for (int d : {0, 1, 2, 3, 5}) {
        InjectivityCertificate c = certify_injective(embed_tstar(d));
        CHECK(c.injective);
        CHECK(c.first == -1);
        CHECK(c.second == -1);
    }
}

TEST_CASE("certify_injective pinpoints a collision") {
    Placement p;
    p.positions = {kOne, kX0, kOne};
    InjectivityCertificate c = certify_injective(p);
    CHECK_FALSE(c.injective);
    CHECK(c.first == 0);
    CHECK(c.second == 2);
}

TEST_CASE("edge shapes classify unit sides and the two diagonals") {
    CHECK(classify_edge_shape(kZero, kOne) == EdgeShape::unit);
    CHECK(classify_edge_shape(kOne, kZero) == EdgeShape::unit);
    CHECK(classify_edge_shape(kZero, kX0) == EdgeShape::unit);
    CHECK(classify_edge_shape(poly_add(kOne, kX0), kOne) == EdgeShape::unit);

    // v1 -> v2 of the root: x0 - 1 = 1*(x0 - 1) spans the angle opened by
    // x0, so it is the first diagonal, not a side.
    CHECK(classify_edge_shape(kOne, kX0) == EdgeShape::diagonal0);
    CHECK(classify_edge_shape(kX0, kOne) == EdgeShape::diagonal0);
    CHECK(classify_edge_shape(mono(1, 1, 1), mono(2, 1, 1)) ==
          EdgeShape::diagonal0); // x0*x1*(x0 - 1)
    CHECK(classify_edge_shape(kZero, poly_sub(kX0, kOne)) ==
          EdgeShape::diagonal0);
    CHECK(classify_edge_shape(kX0, mono(1, 1, 1)) == EdgeShape::diagonal1);

    CHECK(classify_edge_shape(kZero, mono(1, 0, 2)) == EdgeShape::invalid);
    CHECK(classify_edge_shape(kZero, poly_add(kOne, poly_add(kX0, mono(0, 1, 1)))) ==
          EdgeShape::invalid);
    CHECK(classify_edge_shape(kZero, kZero) == EdgeShape::invalid);
    CHECK(classify_edge_shape(kZero, poly_sub(kZero, kOne)) ==
          EdgeShape::unit);
}

TEST_CASE("every portion edge is a side or a diagonal") {
    TstarPortion t = embed_tstar_portion(4);
    int unit = 0, d0 = 0, d1 = 0;
    for (auto [u, v] : t.graph.edges) {
        EdgeShape s = classify_edge_shape(t.placement.positions[u],
                                          t.placement.positions[v]);
        REQUIRE(s != EdgeShape::invalid);
        unit += s == EdgeShape::unit;
        d0 += s == EdgeShape::diagonal0;
        d1 += s == EdgeShape::diagonal1;
    }
    CHECK(unit + d0 + d1 == static_cast<int>(t.graph.edges.size()));
    CHECK(unit > 0);
    CHECK(d0 > 0);
    CHECK(d1 > 0);
}

TEST_CASE("embedding a four-cycle reproduces the rhombus by value") {
    Graph c4 = make_graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    DeltaTreeBuild b = build_delta_tree(c4);
    REQUIRE(b.tree.has_value());
    FaceTree ft = face_tree(*b.tree);
    Placement p = embed_face_tree(ft, *b.tree);
    REQUIRE(p.positions.size() == 4);
    std::set<BiPoly> got(p.positions.begin(), p.positions.end());
    std::set<BiPoly> want{kZero, kOne, kX0, poly_add(kOne, kX0)};
    CHECK(got == want);
}

TEST_CASE("face-tree embeddings stay injective with valid edge shapes") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(80));
        Graph g = random_delta_tree(n, rng);
        DeltaTreeBuild b = build_delta_tree(g);
        REQUIRE(b.tree.has_value());
        FaceTree ft = face_tree(*b.tree);
        Placement p = embed_face_tree(ft, *b.tree);
        REQUIRE(static_cast<int>(p.positions.size()) == n);
        REQUIRE(certify_injective(p).injective);
        for (auto [u, v] : b.tree->graph.edges)
            REQUIRE(classify_edge_shape(p.positions[u], p.positions[v]) !=
                    EdgeShape::invalid);
    }
}

TEST_CASE("triangle embeddings use three mutually touching positions") {
    Graph c3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    DeltaTreeBuild b = build_delta_tree(c3);
    REQUIRE(b.tree.has_value());
    Placement p = embed_face_tree(face_tree(*b.tree), *b.tree);
    REQUIRE(p.positions.size() == 3);
    REQUIRE(certify_injective(p).injective);
    for (auto [u, v] : b.tree->graph.edges)
        CHECK(classify_edge_shape(p.positions[u], p.positions[v]) !=
              EdgeShape::invalid);
}
