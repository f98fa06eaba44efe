#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "embedding.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace trilength {

/// Numeric interpretation of the two torus variables plus a global scale.
/// x0 evaluates to exp(i*theta0), x1 to exp(i*theta1); every position
/// polynomial is evaluated and multiplied by scale.
struct TorusParams {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double scale = 1.0;
};

/// Draws both angles uniformly from (0.05, 2*pi - 0.05), redrawing the pair
/// until they differ by at least 1e-3, so the three length classes stay
/// comfortably apart.  Scale is 1.
TorusParams sample_params(SplitMix64& rng);

/// Parameters whose three class lengths reproduce the given values: the
/// first occurrence of the maximum becomes the unit length (scale), the two
/// remaining values in order become the diagonal lengths via
/// theta = 2*asin(l / (2*scale)).
TorusParams solve_params(const std::array<double, 3>& lengths);

/// Explicit angles (each strictly between 0 and 2*pi) and a positive scale.
TorusParams angle_params(double theta0, double theta1, double scale = 1.0);

/// One straight-line edge of the numeric drawing.  length_class indexes
/// class_lengths; original marks edges of the caller's input graph as
/// opposed to chords and closures inserted on the way to a triangulation.
struct DrawnEdge {
    int u = 0;
    int v = 0;
    int length_class = 0;
    bool original = true;
};

/// A numeric straight-line drawing together with the exact positions it was
/// evaluated from.  class_lengths holds the unit length and the two
/// diagonal lengths; every edge length must fall in one of the three.
struct Drawing {
    TorusParams params;
    std::array<double, 3> class_lengths{};
    std::vector<BiPoly> polys;
    std::vector<std::complex<double>> points;
    std::vector<DrawnEdge> edges;
};

/// Evaluates the placement at the given parameters and assigns every edge of
/// g to the nearest length class.  original flags edges also present in
/// `original` (compared by endpoint pair).
Drawing realize(const Placement& pl, const Graph& g, const Graph& original,
                const TorusParams& params);

/// Certification data for a drawing.  pass holds exactly when every edge
/// length matches its class within the relative tolerance and no two
/// vertices coincide.
struct VerifyReport {
    double max_rel_deviation = 0.0;
    double min_pairwise_distance = 0.0;
    int distinct_class_lengths = 0;
    bool pass = false;
};

VerifyReport verify_drawing(const Drawing& d, double tol);

/// Closest pair distance over all points (plane sweep; +infinity for fewer
/// than two points).
double min_pairwise_distance(const std::vector<std::complex<double>>& pts);

/// Deterministic standalone SVG: edges coloured by length class (inserted
/// edges dashed), vertices as dots, y axis flipped to mathematical
/// orientation.
std::string emit_svg(const Drawing& d);

/// Deterministic JSON with parameters, class lengths, vertex coordinates
/// plus exact position polynomials, and classified edges.  Parsing the
/// output and emitting again reproduces the text byte for byte.
std::string emit_drawing_json(const Drawing& d);
Drawing parse_drawing_json(const std::string& text);

} // namespace trilength
