#include "trilength.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "embedding.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "hstar.hpp"
#include "outerplanar.hpp"
#include "pipeline.hpp"
#include "realize.hpp"
#include "selftest.hpp"

using namespace trilength;

struct tl_graph {
    Graph g;
};

struct tl_drawing {
    Drawing d;
    VerifyReport report;
    int attempts = 1;
    std::uint64_t seed_used = 0;
};

namespace {

thread_local std::string t_last_error;

tl_status fail(tl_status s, const std::string& msg) {
    t_last_error = msg;
    return s;
}

tl_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::parse: return TL_ERR_PARSE;
    case ErrorKind::domain: return TL_ERR_DOMAIN;
    case ErrorKind::limit: return TL_ERR_LIMIT;
    case ErrorKind::verification: return TL_ERR_VERIFY;
    case ErrorKind::internal: return TL_ERR_INTERNAL;
    }
    return TL_ERR_INTERNAL;
}

template <typename F>
tl_status guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TL_ERR_INTERNAL, "unknown failure");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tl_status put_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (*out == nullptr) return fail(TL_ERR_INTERNAL, "out of memory");
    return TL_OK;
}

ParamsSource params_from(const tl_draw_options& o) {
    switch (o.mode) {
    case TL_PARAMS_SEED: return ParamsSource::from_seed(o.seed);
    case TL_PARAMS_LENGTHS:
        return ParamsSource::from_lengths(
            {o.lengths[0], o.lengths[1], o.lengths[2]});
    case TL_PARAMS_ANGLES:
        return ParamsSource::from_angles(o.theta0, o.theta1, o.scale);
    }
    throw_parse("unknown parameter mode");
}

double tolerance_from(const tl_draw_options& o) {
    return o.tolerance > 0.0 ? o.tolerance : kDefaultTolerance;
}

tl_drawing* wrap(PipelineResult&& r) {
    auto* d = new tl_drawing;
    d->d = std::move(r.drawing);
    d->report = r.report;
    d->attempts = r.attempts;
    d->seed_used = r.seed_used;
    return d;
}

/// One JSON shape for both address directions.
std::string describe_address(const Address& a) {
    QREncoding e = qr_encode(a);
    BiPoly pos = psi_closed_form(e);

    nlohmann::ordered_json j;
    j["address"] = format_address(a);
    j["q"] = e.q;
    j["rho"] = e.rho;
    j["m"] = e.m();
    j["proper"] = is_proper(e);
    j["ty"] = ty(a);
    auto poly = nlohmann::ordered_json::array();
    for (const auto& t : pos.terms)
        poly.push_back({t.mono.e0, t.mono.e1, t.coeff});
    j["position"] = std::move(poly);
    j["position_pretty"] = poly_pretty(pos);
    return j.dump(2) + "\n";
}

} // namespace

extern "C" {

const char* tl_last_error(void) { return t_last_error.c_str(); }

const char* tl_version(void) { return "1.0.0"; }

void tl_string_free(char* s) { std::free(s); }

tl_status tl_graph_parse(const char* text, tl_graph** out) {
    if (text == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_graph_parse: null argument");
    *out = nullptr;
    return guarded([&] {
        auto* g = new tl_graph{parse_graph(text)};
        *out = g;
        return TL_OK;
    });
}

void tl_graph_free(tl_graph* g) { delete g; }

int tl_graph_vertex_count(const tl_graph* g) { return g ? g->g.n : 0; }

int tl_graph_edge_count(const tl_graph* g) {
    return g ? static_cast<int>(g->g.edges.size()) : 0;
}

tl_status tl_check_outerplanar(const tl_graph* g, int* outerplanar,
                               char** reason_out) {
    if (g == nullptr || outerplanar == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_check_outerplanar: null argument");
    if (reason_out != nullptr) *reason_out = nullptr;
    return guarded([&] {
        OuterplanarVerdict v = is_outerplanar(g->g);
        *outerplanar = v.outerplanar ? 1 : 0;
        if (!v.outerplanar && reason_out != nullptr)
            return put_string(v.reason, reason_out);
        return TL_OK;
    });
}

void tl_draw_options_init(tl_draw_options* opts) {
    if (opts == nullptr) return;
    opts->mode = TL_PARAMS_SEED;
    opts->seed = 0;
    opts->lengths[0] = opts->lengths[1] = opts->lengths[2] = 0.0;
    opts->theta0 = 0.0;
    opts->theta1 = 0.0;
    opts->scale = 1.0;
    opts->tolerance = 1e-9;
}

tl_status tl_draw_graph(const tl_graph* g, const tl_draw_options* opts,
                        tl_drawing** out) {
    if (g == nullptr || opts == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_draw_graph: null argument");
    *out = nullptr;
    return guarded([&] {
        auto r = draw_graph(g->g, params_from(*opts), tolerance_from(*opts));
        *out = wrap(std::move(r));
        return TL_OK;
    });
}

tl_status tl_draw_tstar(int depth, const tl_draw_options* opts,
                        tl_drawing** out) {
    if (opts == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_draw_tstar: null argument");
    *out = nullptr;
    return guarded([&] {
        auto r = draw_tstar(depth, params_from(*opts), tolerance_from(*opts));
        *out = wrap(std::move(r));
        return TL_OK;
    });
}

int tl_drawing_vertex_count(const tl_drawing* d) {
    return d ? static_cast<int>(d->d.points.size()) : 0;
}

int tl_drawing_edge_count(const tl_drawing* d) {
    return d ? static_cast<int>(d->d.edges.size()) : 0;
}

tl_status tl_drawing_vertex(const tl_drawing* d, int index, double* x,
                            double* y) {
    if (d == nullptr || x == nullptr || y == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_vertex: null argument");
    if (index < 0 || index >= static_cast<int>(d->d.points.size()))
        return fail(TL_ERR_ARGUMENT, "tl_drawing_vertex: index out of range");
    *x = d->d.points[index].real();
    *y = d->d.points[index].imag();
    return TL_OK;
}

tl_status tl_drawing_edge(const tl_drawing* d, int index, int* u, int* v,
                          int* length_class, int* original) {
    if (d == nullptr || u == nullptr || v == nullptr ||
        length_class == nullptr || original == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_edge: null argument");
    if (index < 0 || index >= static_cast<int>(d->d.edges.size()))
        return fail(TL_ERR_ARGUMENT, "tl_drawing_edge: index out of range");
    const DrawnEdge& e = d->d.edges[index];
    *u = e.u;
    *v = e.v;
    *length_class = e.length_class;
    *original = e.original ? 1 : 0;
    return TL_OK;
}

tl_status tl_drawing_class_lengths(const tl_drawing* d, double out[3]) {
    if (d == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_class_lengths: null argument");
    for (int i = 0; i < 3; ++i) out[i] = d->d.class_lengths[i];
    return TL_OK;
}

tl_status tl_drawing_params(const tl_drawing* d, double* theta0,
                            double* theta1, double* scale) {
    if (d == nullptr || theta0 == nullptr || theta1 == nullptr ||
        scale == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_params: null argument");
    *theta0 = d->d.params.theta0;
    *theta1 = d->d.params.theta1;
    *scale = d->d.params.scale;
    return TL_OK;
}

tl_status tl_drawing_report(const tl_drawing* d, double* max_rel_deviation,
                            double* min_pairwise_distance,
                            int* distinct_class_lengths) {
    if (d == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_report: null argument");
    if (max_rel_deviation != nullptr)
        *max_rel_deviation = d->report.max_rel_deviation;
    if (min_pairwise_distance != nullptr)
        *min_pairwise_distance = d->report.min_pairwise_distance;
    if (distinct_class_lengths != nullptr)
        *distinct_class_lengths = d->report.distinct_class_lengths;
    return TL_OK;
}

tl_status tl_drawing_provenance(const tl_drawing* d, uint64_t* seed_used,
                                int* attempts) {
    if (d == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_provenance: null argument");
    if (seed_used != nullptr) *seed_used = d->seed_used;
    if (attempts != nullptr) *attempts = d->attempts;
    return TL_OK;
}

tl_status tl_drawing_json(const tl_drawing* d, char** out) {
    if (d == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_json: null argument");
    *out = nullptr;
    return guarded([&] { return put_string(emit_drawing_json(d->d), out); });
}

tl_status tl_drawing_svg(const tl_drawing* d, char** out) {
    if (d == nullptr || out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_drawing_svg: null argument");
    *out = nullptr;
    return guarded([&] { return put_string(emit_svg(d->d), out); });
}

void tl_drawing_free(tl_drawing* d) { delete d; }

tl_status tl_encode_address(const char* address, char** json_out) {
    if (address == nullptr || json_out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_encode_address: null argument");
    *json_out = nullptr;
    return guarded([&] {
        return put_string(describe_address(parse_address(address)), json_out);
    });
}

tl_status tl_decode_qr(const uint32_t* q, int q_len, const uint8_t* rho,
                       int rho_len, int m, char** json_out) {
    if (q == nullptr || q_len <= 0 || (rho == nullptr && rho_len > 0) ||
        rho_len < 0 || json_out == nullptr)
        return fail(TL_ERR_ARGUMENT, "tl_decode_qr: null or empty argument");
    *json_out = nullptr;
    return guarded([&] {
        std::vector<uint32_t> qv(q, q + q_len);
        std::vector<uint8_t> rv(rho, rho + rho_len);
        std::uint32_t mm =
            m < 0 ? static_cast<std::uint32_t>(rho_len)
                  : static_cast<std::uint32_t>(m);
        Address a = qr_decode(qv, rv, mm);
        return put_string(describe_address(a), json_out);
    });
}

tl_status tl_selftest(int max_n, int depth, int* passed, char** report_out) {
    if (report_out != nullptr) *report_out = nullptr;
    return guarded([&] {
        SelftestOptions opts;
        if (max_n > 0) opts.max_n = max_n;
        if (depth > 0) opts.depth = depth;
        SelftestReport rep = run_selftest(opts);
        if (passed != nullptr) *passed = rep.pass ? 1 : 0;
        if (report_out != nullptr) {
            tl_status s = put_string(format_selftest(rep), report_out);
            if (s != TL_OK) return s;
        }
        if (!rep.pass)
            return fail(TL_ERR_VERIFY, "one or more selftest items failed");
        return TL_OK;
    });
}

} // extern "C"
