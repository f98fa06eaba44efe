#include "realize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace trilength {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::array<double, 3> class_lengths_of(const TorusParams& p) {
    return {p.scale, p.scale * 2.0 * std::sin(p.theta0 / 2.0),
            p.scale * 2.0 * std::sin(p.theta1 / 2.0)};
}

} // namespace

TorusParams sample_params(SplitMix64& rng) {
    const double lo = 0.05;
    const double hi = kTwoPi - 0.05;
    auto draw = [&] { return lo + (hi - lo) * rng.next_double(); };
    double t0 = draw();
    double t1 = draw();
    while (std::abs(t0 - t1) < 1e-3) {
        t0 = draw();
        t1 = draw();
    }
    return {t0, t1, 1.0};
}

TorusParams solve_params(const std::array<double, 3>& lengths) {
    for (double l : lengths)
        if (!std::isfinite(l) || l <= 0.0)
            throw_domain("all three lengths must be positive finite numbers");
    int mi = 0;
    for (int i = 1; i < 3; ++i)
        if (lengths[i] > lengths[mi]) mi = i;
    double s = lengths[mi];
    std::array<double, 2> rest{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != mi) rest[k++] = lengths[i];
    return {2.0 * std::asin(rest[0] / (2.0 * s)),
            2.0 * std::asin(rest[1] / (2.0 * s)), s};
}

TorusParams angle_params(double theta0, double theta1, double scale) {
    for (double t : {theta0, theta1})
        if (!std::isfinite(t) || t <= 0.0 || t >= kTwoPi)
            throw_domain("angles must lie strictly between 0 and 2*pi");
    if (!std::isfinite(scale) || scale <= 0.0)
        throw_domain("scale must be a positive finite number");
    return {theta0, theta1, scale};
}

Drawing realize(const Placement& pl, const Graph& g, const Graph& original,
                const TorusParams& params) {
    if (static_cast<int>(pl.positions.size()) != g.n)
        throw_internal("placement size does not match the graph");

    Drawing d;
    d.params = params;
    d.class_lengths = class_lengths_of(params);
    d.polys = pl.positions;
    d.points.reserve(pl.positions.size());
    for (const auto& p : pl.positions)
        d.points.push_back(params.scale *
                           poly_eval(p, params.theta0, params.theta1));

    d.edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        double len = std::abs(d.points[u] - d.points[v]);
        int cls = 0;
        double gap = std::abs(len - d.class_lengths[0]);
        for (int k = 1; k < 3; ++k) {
            double gk = std::abs(len - d.class_lengths[k]);
            if (gk < gap) {
                gap = gk;
                cls = k;
            }
        }
        d.edges.push_back({u, v, cls, original.has_edge(u, v)});
    }
    return d;
}

double min_pairwise_distance(const std::vector<std::complex<double>>& pts) {
    const double inf = std::numeric_limits<double>::infinity();
    if (pts.size() < 2) return inf;

    std::vector<std::pair<double, double>> p; // (x, y)
    p.reserve(pts.size());
    for (const auto& z : pts) p.push_back({z.real(), z.imag()});
    std::sort(p.begin(), p.end());

    // Sweep left to right keeping the points within `best` of the front,
    // ordered by y; only those can improve the closest pair.
    std::multiset<std::pair<double, double>> active; // (y, x)
    double best = inf;
    std::size_t tail = 0;
    for (const auto& [x, y] : p) {
        while (tail < p.size() && p[tail].first < x - best) {
            active.erase(active.find({p[tail].second, p[tail].first}));
            ++tail;
        }
        auto lo = active.lower_bound({y - best, -inf});
        auto hi = active.upper_bound({y + best, inf});
        for (auto it = lo; it != hi; ++it)
            best = std::min(best, std::hypot(x - it->second, y - it->first));
        if (best == 0.0) return 0.0;
        active.insert({y, x});
    }
    return best;
}

VerifyReport verify_drawing(const Drawing& d, double tol) {
    VerifyReport r;
    r.min_pairwise_distance = min_pairwise_distance(d.points);

    std::set<double> distinct(d.class_lengths.begin(), d.class_lengths.end());
    r.distinct_class_lengths = static_cast<int>(distinct.size());

    bool lengths_ok = true;
    for (double l : d.class_lengths)
        if (!std::isfinite(l) || l <= 0.0) lengths_ok = false;

    for (const auto& e : d.edges) {
        double len = std::abs(d.points[e.u] - d.points[e.v]);
        double ref = d.class_lengths[e.length_class];
        double dev = ref > 0.0 ? std::abs(len - ref) / ref
                               : std::numeric_limits<double>::infinity();
        r.max_rel_deviation = std::max(r.max_rel_deviation, dev);
    }

    r.pass = lengths_ok && r.max_rel_deviation <= tol &&
             r.min_pairwise_distance > 0.0;
    return r;
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string emit_svg(const Drawing& d) {
    // Flip y so the drawing appears in mathematical orientation.
    std::vector<std::pair<double, double>> pts;
    pts.reserve(d.points.size());
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        double x = d.points[i].real();
        double y = -d.points[i].imag();
        pts.push_back({x, y});
        if (i == 0) {
            minx = maxx = x;
            miny = maxy = y;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
    double w = maxx - minx, h = maxy - miny;
    double diag = std::hypot(w, h);
    if (diag <= 0.0) diag = 1.0;
    double margin = 0.05 * diag;
    minx -= margin;
    miny -= margin;
    w += 2 * margin;
    h += 2 * margin;

    static const char* kClassColor[3] = {"#1f77b4", "#d62728", "#2ca02c"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fixed6(minx) << " " << fixed6(miny) << " " << fixed6(w) << " "
       << fixed6(h) << "\">\n";
    os << "  <g fill=\"none\" stroke-width=\"" << fixed6(0.008 * diag)
       << "\" stroke-linecap=\"round\">\n";
    for (const auto& e : d.edges) {
        os << "    <line x1=\"" << fixed6(pts[e.u].first) << "\" y1=\""
           << fixed6(pts[e.u].second) << "\" x2=\"" << fixed6(pts[e.v].first)
           << "\" y2=\"" << fixed6(pts[e.v].second) << "\" stroke=\""
           << kClassColor[e.length_class % 3] << "\"";
        if (!e.original)
            os << " stroke-dasharray=\"" << fixed6(0.02 * diag) << " "
               << fixed6(0.015 * diag) << "\"";
        os << "/>\n";
    }
    os << "  </g>\n";
    os << "  <g fill=\"#222222\">\n";
    for (const auto& [x, y] : pts)
        os << "    <circle cx=\"" << fixed6(x) << "\" cy=\"" << fixed6(y)
           << "\" r=\"" << fixed6(0.012 * diag) << "\"/>\n";
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

std::string emit_drawing_json(const Drawing& d) {
    nlohmann::ordered_json j;
    j["params"] = {{"theta0", d.params.theta0},
                   {"theta1", d.params.theta1},
                   {"scale", d.params.scale}};
    j["class_lengths"] = d.class_lengths;

    auto verts = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        auto poly = nlohmann::ordered_json::array();
        for (const auto& t : d.polys[i].terms)
            poly.push_back({t.mono.e0, t.mono.e1, t.coeff});
        verts.push_back({{"x", d.points[i].real()},
                         {"y", d.points[i].imag()},
                         {"poly", poly}});
    }
    j["vertices"] = std::move(verts);

    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : d.edges)
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"class", e.length_class},
                         {"original", e.original}});
    j["edges"] = std::move(edges);

    return j.dump(2) + "\n";
}

Drawing parse_drawing_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("invalid drawing JSON: ") + e.what());
    }
    try {
        Drawing d;
        d.params.theta0 = j.at("params").at("theta0").get<double>();
        d.params.theta1 = j.at("params").at("theta1").get<double>();
        d.params.scale = j.at("params").at("scale").get<double>();
        const auto& cl = j.at("class_lengths");
        if (!cl.is_array() || cl.size() != 3)
            throw_parse("class_lengths must be an array of three numbers");
        for (int i = 0; i < 3; ++i) d.class_lengths[i] = cl[i].get<double>();

        for (const auto& v : j.at("vertices")) {
            d.points.emplace_back(v.at("x").get<double>(),
                                  v.at("y").get<double>());
            d.polys.push_back(parse_poly(v.at("poly").dump()));
        }
        const int n = static_cast<int>(d.points.size());
        for (const auto& e : j.at("edges")) {
            DrawnEdge de;
            de.u = e.at("u").get<int>();
            de.v = e.at("v").get<int>();
            de.length_class = e.at("class").get<int>();
            de.original = e.at("original").get<bool>();
            if (de.u < 0 || de.u >= n || de.v < 0 || de.v >= n ||
                de.u == de.v)
                throw_parse("edge endpoints out of range");
            if (de.length_class < 0 || de.length_class > 2)
                throw_parse("edge class out of range");
            d.edges.push_back(de);
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("invalid drawing JSON: ") + e.what());
    }
}

} // namespace trilength
