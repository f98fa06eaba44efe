#include "pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "embedding.hpp"
#include "errors.hpp"
#include "outerplanar.hpp"

namespace trilength {

namespace {

struct Prepared {
    Placement placement;
    Graph graph;    // what gets drawn, including inserted edges
    Graph original; // the caller's input, for flagging edges
};

double bbox_diagonal(const std::vector<std::complex<double>>& pts) {
    if (pts.empty()) return 0.0;
    double minx = pts[0].real(), maxx = minx;
    double miny = pts[0].imag(), maxy = miny;
    for (const auto& z : pts) {
        minx = std::min(minx, z.real());
        maxx = std::max(maxx, z.real());
        miny = std::min(miny, z.imag());
        maxy = std::max(maxy, z.imag());
    }
    return std::hypot(maxx - minx, maxy - miny);
}

PipelineResult finish(const Prepared& pr, const ParamsSource& ps,
                      double tol) {
    auto cert = certify_injective(pr.placement);
    if (!cert.injective)
        throw_verification("exact positions are not pairwise distinct");

    PipelineResult out;
    if (ps.kind != ParamsSource::Kind::seed) {
        TorusParams params =
            ps.kind == ParamsSource::Kind::lengths
                ? solve_params(ps.lengths)
                : angle_params(ps.theta0, ps.theta1, ps.scale);
        out.drawing = realize(pr.placement, pr.graph, pr.original, params);
        out.report = verify_drawing(out.drawing, tol);
        if (!out.report.pass)
            throw_verification(
                "drawing failed certification at the requested parameters");
        return out;
    }

    const int kMaxAttempts = 16;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::uint64_t seed = ps.seed + static_cast<std::uint64_t>(attempt);
        SplitMix64 rng(seed);
        TorusParams params = sample_params(rng);
        Drawing d = realize(pr.placement, pr.graph, pr.original, params);
        VerifyReport rep = verify_drawing(d, tol);
        // A pair of vertices may come numerically close at unlucky angles
        // even though the exact positions differ; skip to the next seed.
        double diam = bbox_diagonal(d.points);
        bool crowded = rep.min_pairwise_distance < 1e-12 * diam;
        if (rep.pass && !crowded) {
            out.drawing = std::move(d);
            out.report = rep;
            out.attempts = attempt + 1;
            out.seed_used = seed;
            return out;
        }
    }
    throw_verification("no non-degenerate drawing in 16 seed attempts");
}

} // namespace

PipelineResult draw_graph(const Graph& g, const ParamsSource& ps,
                          double tol) {
    DeltaTreeBuild build = build_delta_tree(g); // rejects non-outerplanar
    Prepared pr;
    pr.original = g;
    if (!build.tree) {
        // Zero or one vertex: nothing to triangulate, place at the origin.
        pr.graph = g;
        pr.placement.positions.assign(g.n, BiPoly::zero());
    } else {
        const DeltaTree& dt = *build.tree;
        FaceTree ft = face_tree(dt);
        pr.placement = embed_face_tree(ft, dt);
        pr.graph = dt.graph;
    }
    return finish(pr, ps, tol);
}

PipelineResult draw_tstar(int depth, const ParamsSource& ps, double tol) {
    TstarPortion portion = embed_tstar_portion(depth);
    Prepared pr;
    pr.placement = std::move(portion.placement);
    pr.original = portion.graph;
    pr.graph = std::move(portion.graph);
    return finish(pr, ps, tol);
}

} // namespace trilength
