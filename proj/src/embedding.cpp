#include "embedding.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "errors.hpp"

namespace trilength {

namespace {

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Monomial torus_var(int ty) {
    return ty == 0 ? Monomial{1, 0} : Monomial{0, 1};
}

} // namespace

RhombusState rhombus_root() {
    return {BiPoly::zero(), BiPoly::constant(1), 0, 0};
}

BiPoly rhombus_direction(const RhombusState& s) {
    BiPoly p = poly_sub(s.z1, s.z0);
    if (p.terms.size() != 1 || p.terms[0].coeff != 1)
        throw_internal("rhombus base direction is not a unit monomial");
    return p;
}

static BiPoly across(const RhombusState& s, const BiPoly& base) {
    return poly_add(base,
                    poly_mul_monomial(rhombus_direction(s), torus_var(s.ty), 1));
}

BiPoly rhombus_corner2(const RhombusState& s) { return across(s, s.z0); }
BiPoly rhombus_corner3(const RhombusState& s) { return across(s, s.z1); }

RhombusState rhombus_child(const RhombusState& s, Label l) {
    switch (l) {
    case Label::Fwd:
        return {rhombus_corner2(s), rhombus_corner3(s), s.ty, s.fwd_run + 1};
    case Label::Left:
        return {s.z0, rhombus_corner2(s), s.ty ^ (s.fwd_run & 1), 0};
    case Label::Right:
        return {s.z1, rhombus_corner3(s), s.ty ^ (s.fwd_run & 1) ^ 1, 0};
    }
    throw_internal("unknown label");
}

BiPoly psi_closed_form(const QREncoding& e) {
    if (e.q.size() != e.rho.size() + 1)
        throw_parse("encoding needs exactly one more run count than turns");
    for (auto r : e.rho)
        if (r > 1) throw_parse("turn flags must be 0 or 1");

    BiPoly pos = BiPoly::zero();
    BiPoly prefix = BiPoly::constant(1); // P_i, product of step directions
    int nu = 0;                          // torus variable in force after turn i
    const std::size_t m = e.rho.size();
    for (std::size_t i = 0; i < m; ++i) {
        BiPoly next = poly_mul_monomial(prefix, torus_var(nu), 1);
        if (e.q[i] != 0)
            pos = poly_add(pos, poly_mul_monomial(
                                    next, Monomial{0, 0},
                                    static_cast<std::int64_t>(e.q[i])));
        if (e.rho[i] != 0) pos = poly_add(pos, prefix);
        nu ^= static_cast<int>((e.q[i] & 1u) ^ e.rho[i]);
        prefix = std::move(next);
    }
    if (e.q[m] != 0) {
        BiPoly next = poly_mul_monomial(prefix, torus_var(nu), 1);
        pos = poly_add(pos, poly_mul_monomial(
                                next, Monomial{0, 0},
                                static_cast<std::int64_t>(e.q[m])));
    }
    return pos;
}

Placement embed_face_tree(const FaceTree& ft, const DeltaTree& dt) {
    Placement out;
    out.positions.assign(dt.graph.n, BiPoly::zero());
    std::vector<char> assigned(dt.graph.n, 0);

    auto place = [&](int v, const BiPoly& p) {
        if (v < 0 || v >= dt.graph.n)
            throw_internal("face role vertex out of range");
        if (!assigned[v]) {
            assigned[v] = 1;
            out.positions[v] = p;
        } else if (!(out.positions[v] == p)) {
            throw_internal("vertex revisited with a different position");
        }
    };

    // Each stack item covers one face with the current pose: the near
    // triangle (v0, v1, v2) when far is false, the far one (v1, v2, v3)
    // otherwise.
    struct Item {
        int face;
        RhombusState state;
        bool far;
    };
    std::vector<Item> stack;
    stack.push_back({ft.root, rhombus_root(), false});

    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        auto [lv, rv, av] = ft.roles[it.face];
        BiPoly c2 = rhombus_corner2(it.state);
        if (!it.far) {
            place(lv, it.state.z0);
            place(rv, it.state.z1);
            place(av, c2);
        } else {
            place(lv, it.state.z1);
            place(rv, c2);
            place(av, rhombus_corner3(it.state));
        }
        for (int c : ft.children[it.face]) {
            auto entry = ordered(ft.roles[c][0], ft.roles[c][1]);
            if (!it.far) {
                if (entry == ordered(lv, av))
                    stack.push_back(
                        {c, rhombus_child(it.state, Label::Left), false});
                else if (entry == ordered(rv, av))
                    stack.push_back({c, it.state, true});
                else
                    throw_internal("child face not across an apex edge");
            } else {
                if (entry == ordered(lv, av))
                    stack.push_back(
                        {c, rhombus_child(it.state, Label::Right), false});
                else if (entry == ordered(rv, av))
                    stack.push_back(
                        {c, rhombus_child(it.state, Label::Fwd), false});
                else
                    throw_internal("child face not across an apex edge");
            }
        }
    }

    for (int v = 0; v < dt.graph.n; ++v)
        if (!assigned[v]) throw_internal("face tree left a vertex unplaced");
    return out;
}

namespace {

struct PortionBuilder {
    int depth;
    std::map<QREncoding, int> ids;
    std::vector<BiPoly> positions;
    std::set<std::pair<int, int>> edges;
    Address path;

    int corner_id(Corner c, const BiPoly& pos) {
        QREncoding pe = proper_encoding({path, c});
        auto [it, fresh] =
            ids.try_emplace(std::move(pe), static_cast<int>(positions.size()));
        if (fresh) {
            positions.push_back(pos);
        } else if (!(positions[it->second] == pos)) {
            throw_internal("identified corners disagree on position");
        }
        return it->second;
    }

    void visit(const RhombusState& s) {
        int i0 = corner_id(Corner::V0, s.z0);
        int i1 = corner_id(Corner::V1, s.z1);
        int i2 = corner_id(Corner::V2, rhombus_corner2(s));
        int i3 = corner_id(Corner::V3, rhombus_corner3(s));
        edges.insert(ordered(i0, i1));
        edges.insert(ordered(i0, i2));
        edges.insert(ordered(i1, i2));
        edges.insert(ordered(i1, i3));
        edges.insert(ordered(i2, i3));
        if (static_cast<int>(path.size()) < depth) {
            for (Label l : {Label::Fwd, Label::Left, Label::Right}) {
                path.push_back(l);
                visit(rhombus_child(s, l));
                path.pop_back();
            }
        }
    }
};

} // namespace

TstarPortion embed_tstar_portion(int depth) {
    if (depth < 0) throw_domain("depth must be non-negative");
    if (depth > 10) throw_limit("depth is capped at 10");

    PortionBuilder b;
    b.depth = depth;
    b.visit(rhombus_root());

    TstarPortion out;
    out.placement.positions = std::move(b.positions);
    std::vector<std::pair<int, int>> es(b.edges.begin(), b.edges.end());
    out.graph =
        make_graph(static_cast<int>(out.placement.positions.size()), es);
    return out;
}

Placement embed_tstar(int depth) {
    return embed_tstar_portion(depth).placement;
}

InjectivityCertificate certify_injective(const Placement& p) {
    std::unordered_map<std::string, int> seen;
    seen.reserve(p.positions.size() * 2);
    for (std::size_t v = 0; v < p.positions.size(); ++v) {
        auto [it, fresh] =
            seen.try_emplace(poly_to_string(p.positions[v]), static_cast<int>(v));
        if (!fresh)
            return {false, it->second, static_cast<int>(v)};
    }
    return {true, -1, -1};
}

EdgeShape classify_edge_shape(const BiPoly& pu, const BiPoly& pv) {
    BiPoly d = poly_sub(pu, pv);
    if (d.terms.size() == 1) {
        auto c = d.terms[0].coeff;
        return (c == 1 || c == -1) ? EdgeShape::unit : EdgeShape::invalid;
    }
    if (d.terms.size() == 2) {
        const auto& lo = d.terms[0];
        const auto& hi = d.terms[1];
        if (hi.coeff + lo.coeff == 0 && (hi.coeff == 1 || hi.coeff == -1)) {
            if (hi.mono.e0 == lo.mono.e0 + 1 && hi.mono.e1 == lo.mono.e1)
                return EdgeShape::diagonal0;
            if (hi.mono.e0 == lo.mono.e0 && hi.mono.e1 == lo.mono.e1 + 1)
                return EdgeShape::diagonal1;
        }
    }
    return EdgeShape::invalid;
}

} // namespace trilength
