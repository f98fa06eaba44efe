#pragma once

#include <array>
#include <cstdint>

#include "graph.hpp"
#include "realize.hpp"

namespace trilength {

/// Relative length tolerance a drawing must meet to be certified.
constexpr double kDefaultTolerance = 1e-9;

/// Where the numeric parameters come from: a seed for sampled angles, three
/// explicit target lengths, or two explicit angles.
struct ParamsSource {
    enum class Kind { seed, lengths, angles };
    Kind kind = Kind::seed;
    std::uint64_t seed = 0;
    std::array<double, 3> lengths{};
    double theta0 = 0.0;
    double theta1 = 0.0;
    double scale = 1.0;

    static ParamsSource from_seed(std::uint64_t s) {
        ParamsSource p;
        p.kind = Kind::seed;
        p.seed = s;
        return p;
    }
    static ParamsSource from_lengths(const std::array<double, 3>& l) {
        ParamsSource p;
        p.kind = Kind::lengths;
        p.lengths = l;
        return p;
    }
    static ParamsSource from_angles(double t0, double t1, double s = 1.0) {
        ParamsSource p;
        p.kind = Kind::angles;
        p.theta0 = t0;
        p.theta1 = t1;
        p.scale = s;
        return p;
    }
};

/// A certified drawing plus its verification report.  In seed mode,
/// seed_used records the (possibly bumped) seed that produced it.
struct PipelineResult {
    Drawing drawing;
    VerifyReport report;
    int attempts = 1;
    std::uint64_t seed_used = 0;
};

/// Full path from an outerplanar graph to a certified drawing: triangulate,
/// embed exactly, certify injectivity, evaluate, verify.  Seed mode retries
/// with consecutive seeds (at most 16) when two vertices land closer than
/// 1e-12 of the drawing's diameter; explicit lengths or angles are used
/// as given and failures are reported rather than retried.  Throws on
/// non-outerplanar input (domain) and on certification failure
/// (verification).
PipelineResult draw_graph(const Graph& g, const ParamsSource& ps,
                          double tol = kDefaultTolerance);

/// Same pipeline for the depth-bounded portion of the infinite rhombus tree.
PipelineResult draw_tstar(int depth, const ParamsSource& ps,
                          double tol = kDefaultTolerance);

} // namespace trilength
