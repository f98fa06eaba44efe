#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "trilength.h"

namespace {

const char* kC5 = "0 1\n1 2\n2 3\n3 4\n0 4\n";
const char* kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

tl_graph* must_parse(const char* text) {
    tl_graph* g = nullptr;
    REQUIRE(tl_graph_parse(text, &g) == TL_OK);
    REQUIRE(g != nullptr);
    return g;
}

} // namespace

TEST_CASE("version and error strings are always available") {
    REQUIRE(tl_version() != nullptr);
    CHECK(std::strlen(tl_version()) > 0);
    REQUIRE(tl_last_error() != nullptr);
    tl_string_free(nullptr); // must be a no-op
}

TEST_CASE("graph parsing and accessors") {
    tl_graph* g = must_parse(kC5);
    CHECK(tl_graph_vertex_count(g) == 5);
    CHECK(tl_graph_edge_count(g) == 5);
    tl_graph_free(g);

    tl_graph* bad = nullptr;
    CHECK(tl_graph_parse("bogus line\n", &bad) == TL_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::strlen(tl_last_error()) > 0);

    CHECK(tl_graph_parse(nullptr, &bad) == TL_ERR_ARGUMENT);
    CHECK(tl_graph_parse(kC5, nullptr) == TL_ERR_ARGUMENT);
    tl_graph_free(nullptr); // no-op
}

TEST_CASE("outerplanarity check") {
    tl_graph* c5 = must_parse(kC5);
    int yes = 0;
    char* reason = reinterpret_cast<char*>(1); // must be reset by the call
    CHECK(tl_check_outerplanar(c5, &yes, &reason) == TL_OK);
    CHECK(yes == 1);
    CHECK(reason == nullptr);
    tl_graph_free(c5);

    tl_graph* k4 = must_parse(kK4);
    CHECK(tl_check_outerplanar(k4, &yes, &reason) == TL_OK);
    CHECK(yes == 0);
    REQUIRE(reason != nullptr);
    CHECK(std::strlen(reason) > 0);
    tl_string_free(reason);
    tl_graph_free(k4);

    CHECK(tl_check_outerplanar(nullptr, &yes, nullptr) == TL_ERR_ARGUMENT);
}

TEST_CASE("drawing from a seed, with accessors and provenance") {
    tl_graph* g = must_parse(kC5);
    tl_draw_options opts;
    tl_draw_options_init(&opts);
    CHECK(opts.mode == TL_PARAMS_SEED);
    CHECK(opts.seed == 0);
    CHECK(opts.scale == 1.0);
    opts.seed = 11;

    tl_drawing* d = nullptr;
    REQUIRE(tl_draw_graph(g, &opts, &d) == TL_OK);
    REQUIRE(d != nullptr);
    tl_graph_free(g);

    CHECK(tl_drawing_vertex_count(d) == 5);
    CHECK(tl_drawing_edge_count(d) == 7); // triangulated: 2n-3

    double x = 0, y = 0;
    REQUIRE(tl_drawing_vertex(d, 0, &x, &y) == TL_OK);
    CHECK(tl_drawing_vertex(d, 99, &x, &y) == TL_ERR_ARGUMENT);
    CHECK(tl_drawing_vertex(d, -1, &x, &y) == TL_ERR_ARGUMENT);

    int u = -1, v = -1, cls = -1, orig = -1;
    int originals = 0;
    for (int i = 0; i < tl_drawing_edge_count(d); ++i) {
        REQUIRE(tl_drawing_edge(d, i, &u, &v, &cls, &orig) == TL_OK);
        CHECK(u >= 0);
        CHECK(u < 5);
        CHECK(v >= 0);
        CHECK(v < 5);
        CHECK(cls >= 0);
        CHECK(cls <= 2);
        originals += orig;
    }
    CHECK(originals == 5); // the C5 edges; two inserted chords
    CHECK(tl_drawing_edge(d, 7, &u, &v, &cls, &orig) == TL_ERR_ARGUMENT);

    double lengths[3] = {0, 0, 0};
    REQUIRE(tl_drawing_class_lengths(d, lengths) == TL_OK);
    for (double l : lengths) CHECK(l > 0);

    double t0 = 0, t1 = 0, sc = 0;
    REQUIRE(tl_drawing_params(d, &t0, &t1, &sc) == TL_OK);
    CHECK(t0 > 0);
    CHECK(t1 > 0);
    CHECK(sc == 1.0);

    double dev = 1, mind = 0;
    int distinct = 0;
    REQUIRE(tl_drawing_report(d, &dev, &mind, &distinct) == TL_OK);
    CHECK(dev <= 1e-9);
    CHECK(mind > 0);
    CHECK(distinct == 3);

    uint64_t seed_used = 0;
    int attempts = 0;
    REQUIRE(tl_drawing_provenance(d, &seed_used, &attempts) == TL_OK);
    CHECK(seed_used >= 11);
    CHECK(attempts >= 1);

    char* json = nullptr;
    REQUIRE(tl_drawing_json(d, &json) == TL_OK);
    REQUIRE(json != nullptr);
    CHECK(std::string(json).find("\"class_lengths\"") != std::string::npos);
    tl_string_free(json);

    char* svg = nullptr;
    REQUIRE(tl_drawing_svg(d, &svg) == TL_OK);
    REQUIRE(svg != nullptr);
    CHECK(std::string(svg).rfind("<svg", 0) == 0);
    tl_string_free(svg);

    tl_drawing_free(d);
    tl_drawing_free(nullptr); // no-op
}

TEST_CASE("drawing with explicit target lengths") {
    tl_graph* g = must_parse(kC5);
    tl_draw_options opts;
    tl_draw_options_init(&opts);
    opts.mode = TL_PARAMS_LENGTHS;
    opts.lengths[0] = 1.0;
    opts.lengths[1] = 0.8;
    opts.lengths[2] = 0.55;

    tl_drawing* d = nullptr;
    REQUIRE(tl_draw_graph(g, &opts, &d) == TL_OK);
    double lengths[3];
    REQUIRE(tl_drawing_class_lengths(d, lengths) == TL_OK);
    CHECK(std::abs(lengths[0] - 1.0) <= 1e-9);
    CHECK(std::abs(lengths[1] - 0.8) <= 1e-9 * 0.8);
    CHECK(std::abs(lengths[2] - 0.55) <= 1e-9 * 0.55);
    tl_drawing_free(d);

    opts.lengths[1] = -0.8;
    CHECK(tl_draw_graph(g, &opts, &d) == TL_ERR_DOMAIN);
    CHECK(d == nullptr);
    tl_graph_free(g);
}

TEST_CASE("drawing with explicit angles honours the scale") {
    tl_graph* g = must_parse(kC5);
    tl_draw_options opts;
    tl_draw_options_init(&opts);
    opts.mode = TL_PARAMS_ANGLES;
    opts.theta0 = 1.1;
    opts.theta1 = 2.3;
    opts.scale = 4.0;

    tl_drawing* d = nullptr;
    REQUIRE(tl_draw_graph(g, &opts, &d) == TL_OK);
    double t0, t1, sc;
    REQUIRE(tl_drawing_params(d, &t0, &t1, &sc) == TL_OK);
    CHECK(t0 == 1.1);
    CHECK(t1 == 2.3);
    CHECK(sc == 4.0);
    double lengths[3];
    REQUIRE(tl_drawing_class_lengths(d, lengths) == TL_OK);
    CHECK(lengths[0] == doctest::Approx(4.0));
    tl_drawing_free(d);
    tl_graph_free(g);
}

TEST_CASE("domain and argument failures on drawing entry points") {
    tl_graph* k4 = must_parse(kK4);
    tl_draw_options opts;
    tl_draw_options_init(&opts);
    tl_drawing* d = nullptr;
    CHECK(tl_draw_graph(k4, &opts, &d) == TL_ERR_DOMAIN);
    CHECK(d == nullptr);
    CHECK(std::strlen(tl_last_error()) > 0);
    tl_graph_free(k4);

    tl_graph* c5 = must_parse(kC5);
    CHECK(tl_draw_graph(nullptr, &opts, &d) == TL_ERR_ARGUMENT);
    CHECK(tl_draw_graph(c5, nullptr, &d) == TL_ERR_ARGUMENT);
    CHECK(tl_draw_graph(c5, &opts, nullptr) == TL_ERR_ARGUMENT);

    // A coincidence forced by explicit angles is a verification failure:
    // with theta0 == theta1 two corners of the depth-2 portion collide
    // exactly, so certification must refuse the drawing.
    opts.mode = TL_PARAMS_ANGLES;
    opts.theta0 = 1.0;
    opts.theta1 = 1.0;
    opts.scale = 1.0;
    CHECK(tl_draw_tstar(2, &opts, &d) == TL_ERR_VERIFY);
    CHECK(d == nullptr);
    tl_graph_free(c5);
}

TEST_CASE("tstar drawings and the depth cap") {
    tl_draw_options opts;
    tl_draw_options_init(&opts);
    opts.seed = 5;

    tl_drawing* d = nullptr;
    REQUIRE(tl_draw_tstar(2, &opts, &d) == TL_OK);
    CHECK(tl_drawing_vertex_count(d) == 28);  // 2*13+2 corners at depth 2
    CHECK(tl_drawing_edge_count(d) == 53);    // 4*13+1
    tl_drawing_free(d);
    d = nullptr;

    CHECK(tl_draw_tstar(11, &opts, &d) == TL_ERR_LIMIT);
    CHECK(tl_draw_tstar(-1, &opts, &d) == TL_ERR_DOMAIN);
    CHECK(tl_draw_tstar(2, nullptr, &d) == TL_ERR_ARGUMENT);
}

TEST_CASE("address encode and decode through the C boundary") {
    char* json = nullptr;
    REQUIRE(tl_encode_address("L,F,L,L", &json) == TL_OK);
    std::string s(json);
    tl_string_free(json);
    CHECK(s.find("\"q\": [") != std::string::npos);
    CHECK(s.find("\"m\": 3") != std::string::npos);
    CHECK(s.find("\"proper\": false") != std::string::npos);
    CHECK(s.find("\"ty\": 1") != std::string::npos);
    CHECK(s.find("x0^2") != std::string::npos);

    CHECK(tl_encode_address("L,X", &json) == TL_ERR_PARSE);
    CHECK(tl_encode_address(nullptr, &json) == TL_ERR_ARGUMENT);

    const uint32_t q[2] = {0, 0};
    const uint8_t rho[1] = {1};
    json = nullptr;
    REQUIRE(tl_decode_qr(q, 2, rho, 1, 1, &json) == TL_OK);
    std::string t(json);
    tl_string_free(json);
    CHECK(t.find("\"address\": \"R\"") != std::string::npos);

    // m = -1 defaults to the rho count.
    json = nullptr;
    REQUIRE(tl_decode_qr(q, 2, rho, 1, -1, &json) == TL_OK);
    std::string t2(json);
    tl_string_free(json);
    CHECK(t2 == t);

    CHECK(tl_decode_qr(q, 2, rho, 1, 2, &json) == TL_ERR_PARSE);
    CHECK(tl_decode_qr(nullptr, 0, nullptr, 0, -1, &json) == TL_ERR_ARGUMENT);
}

TEST_CASE("selftest runs clean at reduced size") {
    int passed = 0;
    char* report = nullptr;
    CHECK(tl_selftest(4, 3, &passed, &report) == TL_OK);
    CHECK(passed == 1);
    REQUIRE(report != nullptr);
    std::string s(report);
    tl_string_free(report);
    CHECK(s.find("selftest:") != std::string::npos);
    CHECK(s.find("[FAIL]") == std::string::npos);
}
