#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "hstar.hpp"
#include "oracle.hpp"
#include "outerplanar.hpp"
#include "pipeline.hpp"
#include "realize.hpp"
#include "rng.hpp"

namespace trilength {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

std::string count_detail(long n, const char* what) {
    std::ostringstream os;
    os << n << " " << what;
    return os.str();
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
    SelftestReport rep;
    auto item = [&](const std::string& name,
                    const std::function<std::string()>& body) {
        SelftestItem it;
        it.name = name;
        try {
            it.detail = body();
            it.pass = true;
        } catch (const std::exception& e) {
            it.pass = false;
            it.detail = e.what();
        }
        rep.items.push_back(std::move(it));
    };

    const int depth = std::max(0, std::min(opts.depth, 8));
    const int max_n = std::max(3, opts.max_n);

    item("address-encoding-roundtrip", [&] {
        long n = 0;
        enumerate_addresses(depth, [&](const Address& a) {
            QREncoding e = qr_encode(a);
            Address back = qr_decode(e.q, e.rho, e.m());
            expect(back == a, "decode(encode) mismatch at " + format_address(a));
            ++n;
        });
        long pow3 = 1;
        for (int i = 0; i <= depth; ++i) pow3 *= 3;
        expect(n == (pow3 - 1) / 2, "address count off");
        return count_detail(n, "addresses");
    });

    item("turn-parity-agreement", [&] {
        long n = 0;
        enumerate_addresses(depth, [&](const Address& a) {
            expect(ty(a) == ty_from_encoding(qr_encode(a)),
                   "parity mismatch at " + format_address(a));
            ++n;
        });
        return count_detail(n, "addresses");
    });

    item("closed-form-positions", [&] {
        long n = 0;
        Address a;
        std::function<void(const RhombusState&)> rec =
            [&](const RhombusState& s) {
                expect(psi_closed_form(qr_encode(a)) == s.z0,
                       "closed form disagrees at " + format_address(a));
                ++n;
                if (static_cast<int>(a.size()) < depth)
                    for (Label l : {Label::Fwd, Label::Left, Label::Right}) {
                        a.push_back(l);
                        rec(rhombus_child(s, l));
                        a.pop_back();
                    }
            };
        rec(rhombus_root());
        return count_detail(n, "addresses");
    });

    item("tree-portion-identification", [&] {
        const int d = std::min(depth, 6);
        TstarPortion p = embed_tstar_portion(d);
        long nodes = 1;
        for (int i = 1, pw = 3; i <= d; ++i, pw *= 3) nodes += pw;
        expect(p.graph.n == 2 * nodes + 2, "vertex count off");
        expect(static_cast<long>(p.graph.edges.size()) == 4 * nodes + 1,
               "edge count off");
        auto cert = certify_injective(p.placement);
        expect(cert.injective, "two vertices share a position");
        return count_detail(p.graph.n, "distinct vertices");
    });

    item("edge-shapes", [&] {
        const int d = std::min(depth, 6);
        TstarPortion p = embed_tstar_portion(d);
        long counts[3] = {0, 0, 0};
        for (auto [u, v] : p.graph.edges) {
            EdgeShape s = classify_edge_shape(p.placement.positions[u],
                                              p.placement.positions[v]);
            expect(s != EdgeShape::invalid, "edge with an unexpected shape");
            ++counts[static_cast<int>(s)];
        }
        std::ostringstream os;
        os << counts[0] << " unit / " << counts[1] << " + " << counts[2]
           << " diagonal edges";
        return os.str();
    });

    item("recogniser-vs-minor-oracle", [&] {
        long checked = 0;
        // All graphs on 5 labelled vertices.
        std::vector<std::pair<int, int>> all5;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) all5.push_back({u, v});
        for (unsigned mask = 0; mask < (1u << all5.size()); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (std::size_t i = 0; i < all5.size(); ++i)
                if (mask >> i & 1u) es.push_back(all5[i]);
            Graph g = make_graph(5, es);
            bool rec = is_outerplanar(g).outerplanar;
            bool minor = has_k4_or_k23_minor(g);
            expect(rec == !minor, "disagreement on a 5-vertex graph");
            ++checked;
        }
        // Random graphs on up to max_n (capped for the oracle).
        const int n = std::min(max_n, 10);
        SplitMix64 rng(opts.seed);
        for (int t = 0; t < 200; ++t) {
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_double() < 0.4) es.push_back({u, v});
            Graph g = make_graph(n, es);
            bool rec = is_outerplanar(g).outerplanar;
            bool minor = has_k4_or_k23_minor(g);
            expect(rec == !minor, "disagreement on a random graph");
            ++checked;
        }
        return count_detail(checked, "graphs cross-checked");
    });

    item("random-outerplanar-accepted", [&] {
        SplitMix64 rng(opts.seed + 1);
        long checked = 0;
        for (int t = 0; t < 100; ++t) {
            int n = 3 + static_cast<int>(rng.next_below(48));
            Graph g = random_outerplanar(n, 0.7, rng);
            expect(is_outerplanar(g).outerplanar,
                   "a sampled outerplanar graph was rejected");
            ++checked;
        }
        return count_detail(checked, "graphs accepted");
    });

    item("triangulation-structure", [&] {
        SplitMix64 rng(opts.seed + 2);
        long checked = 0;
        for (int t = 0; t < 50; ++t) {
            int n = 3 + static_cast<int>(rng.next_below(38));
            Graph g = random_outerplanar(n, 0.6, rng);
            DeltaTreeBuild b = build_delta_tree(g);
            expect(b.tree.has_value(), "no triangulation produced");
            const DeltaTree& dt = *b.tree;
            expect(pluck_check(dt.graph), "result is not maximal outerplanar");
            expect(static_cast<int>(dt.faces.size()) == dt.graph.n - 2,
                   "face count off");
            expect(static_cast<int>(dt.graph.edges.size()) ==
                       2 * dt.graph.n - 3,
                   "edge count off");
            for (auto e : g.edges)
                expect(dt.graph.has_edge(e.first, e.second),
                       "an input edge went missing");
            ++checked;
        }
        return count_detail(checked, "triangulations checked");
    });

    item("pipeline-certifies", [&] {
        SplitMix64 rng(opts.seed + 3);
        long checked = 0;
        for (int t = 0; t < 20; ++t) {
            int n = static_cast<int>(rng.next_below(31));
            Graph g = random_outerplanar(n, 0.6, rng);
            auto r = draw_graph(g, ParamsSource::from_seed(opts.seed + t));
            expect(r.report.pass, "a drawing failed verification");
            ++checked;
        }
        auto r = draw_tstar(4, ParamsSource::from_seed(opts.seed));
        expect(r.report.pass, "tree drawing failed verification");
        return count_detail(checked + 1, "drawings certified");
    });

    item("length-targets", [&] {
        Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        std::array<double, 3> want{1.0, 0.8, 0.55};
        auto r = draw_graph(g, ParamsSource::from_lengths(want));
        for (int i = 0; i < 3; ++i)
            expect(std::abs(r.drawing.class_lengths[i] - want[i]) <=
                       1e-9 * want[i],
                   "class length drifted from its target");
        expect(r.report.pass, "drawing failed verification");
        return "three targets reproduced";
    });

    item("drawing-serialisation", [&] {
        Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        auto r = draw_graph(g, ParamsSource::from_seed(opts.seed));
        std::string once = emit_drawing_json(r.drawing);
        Drawing back = parse_drawing_json(once);
        expect(emit_drawing_json(back) == once,
               "serialisation round trip is not the identity");
        return count_detail(static_cast<long>(once.size()), "bytes round-tripped");
    });

    rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                           [](const SelftestItem& i) { return i.pass; });
    return rep;
}

std::string format_selftest(const SelftestReport& r) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& it : r.items) {
        os << (it.pass ? "[ ok ] " : "[FAIL] ") << it.name;
        if (!it.detail.empty()) os << ": " << it.detail;
        os << "\n";
        if (it.pass) ++passed;
    }
    os << "selftest: " << passed << "/" << r.items.size() << " items passed\n";
    return os.str();
}

} // namespace trilength
