#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <cerrno>

#include <CLI11.hpp>
#include <json.hpp>

#include "trilength.h"

namespace {

int exit_code_of(tl_status s) {
    switch (s) {
    case TL_OK: return 0;
    case TL_ERR_DOMAIN: return 1;
    case TL_ERR_PARSE:
    case TL_ERR_ARGUMENT:
    case TL_ERR_LIMIT: return 2;
    case TL_ERR_VERIFY:
    case TL_ERR_INTERNAL: return 3;
    }
    return 3;
}

int report_failure(tl_status s) {
    std::fprintf(stderr, "error: %s\n", tl_last_error());
    return exit_code_of(s);
}

/// Reads the whole file, or stdin for "-".
bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return static_cast<bool>(f);
}

/// Parameter flags shared by `draw` and `tstar`.
struct ParamFlags {
    std::uint64_t seed = 0;
    std::vector<double> lengths;
    double theta0 = 0.0;
    double theta1 = 0.0;
    double scale = 1.0;
    double tolerance = 1e-9;
    std::string format = "json";
    std::string output;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* lengths_opt = nullptr;
    CLI::Option* theta0_opt = nullptr;
    CLI::Option* theta1_opt = nullptr;
    CLI::Option* scale_opt = nullptr;

    void attach(CLI::App* cmd) {
        seed_opt = cmd->add_option("--seed", seed,
                                   "Seed for sampled angles (default: "
                                   "TRILENGTH_SEED or 0)");
        lengths_opt =
            cmd->add_option("--lengths", lengths,
                            "Three target edge lengths, comma separated")
                ->delimiter(',')
                ->expected(3);
        theta0_opt = cmd->add_option(
            "--theta0", theta0, "First angle in (0, 2*pi); needs --theta1");
        theta1_opt = cmd->add_option(
            "--theta1", theta1, "Second angle in (0, 2*pi); needs --theta0");
        scale_opt = cmd->add_option(
            "--scale", scale, "Unit length for explicit angles (default 1)");
        cmd->add_option("--tolerance", tolerance,
                        "Relative length tolerance (default 1e-9)");
        cmd->add_option("--format", format, "Output format: json or svg")
            ->check(CLI::IsMember({"json", "svg"}));
        cmd->add_option("-o,--output", output,
                        "Output file (default: stdout)");

        lengths_opt->excludes(seed_opt)
            ->excludes(theta0_opt)
            ->excludes(theta1_opt)
            ->excludes(scale_opt);
        theta0_opt->excludes(seed_opt)->needs(theta1_opt);
        theta1_opt->excludes(seed_opt)->needs(theta0_opt);
        scale_opt->excludes(seed_opt)->needs(theta0_opt);
    }

    /// Resolves the flags into draw options; returns false with a message
    /// on a bad TRILENGTH_SEED.
    bool resolve(tl_draw_options& opts, std::string& err) const {
        tl_draw_options_init(&opts);
        opts.tolerance = tolerance;
        if (lengths_opt->count() > 0) {
            opts.mode = TL_PARAMS_LENGTHS;
            for (int i = 0; i < 3; ++i) opts.lengths[i] = lengths[i];
            return true;
        }
        if (theta0_opt->count() > 0) {
            opts.mode = TL_PARAMS_ANGLES;
            opts.theta0 = theta0;
            opts.theta1 = theta1;
            opts.scale = scale;
            return true;
        }
        opts.mode = TL_PARAMS_SEED;
        if (seed_opt->count() > 0) {
            opts.seed = seed;
            return true;
        }
        opts.seed = 0;
        if (const char* env = std::getenv("TRILENGTH_SEED")) {
            char* end = nullptr;
            errno = 0;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (errno != 0 || end == env || *end != '\0') {
                err = "TRILENGTH_SEED is not an unsigned integer: " +
                      std::string(env);
                return false;
            }
            opts.seed = v;
        }
        return true;
    }
};

int emit_drawing(tl_drawing* d, const ParamFlags& p) {
    char* text = nullptr;
    tl_status s = (p.format == "svg") ? tl_drawing_svg(d, &text)
                                      : tl_drawing_json(d, &text);
    if (s != TL_OK) return report_failure(s);
    bool ok = write_output(p.output, text);
    tl_string_free(text);
    if (!ok) {
        std::fprintf(stderr, "error: cannot write %s\n", p.output.c_str());
        return 2;
    }

    double dev = 0, dist = 0;
    int classes = 0;
    tl_drawing_report(d, &dev, &dist, &classes);
    std::uint64_t seed_used = 0;
    int attempts = 0;
    tl_drawing_provenance(d, &seed_used, &attempts);
    std::fprintf(stderr,
                 "certified: %d vertices, %d edges, %d class lengths, "
                 "max deviation %.3g, min distance %.3g\n",
                 tl_drawing_vertex_count(d), tl_drawing_edge_count(d),
                 classes, dev, dist);
    return 0;
}

int run_check(const std::string& input) {
    std::string text;
    if (!read_input(input, text)) {
        std::fprintf(stderr, "error: cannot read %s\n", input.c_str());
        return 2;
    }
    tl_graph* g = nullptr;
    tl_status s = tl_graph_parse(text.c_str(), &g);
    if (s != TL_OK) return report_failure(s);

    int yes = 0;
    char* reason = nullptr;
    s = tl_check_outerplanar(g, &yes, &reason);
    if (s != TL_OK) {
        tl_graph_free(g);
        return report_failure(s);
    }
    if (yes) {
        std::printf("outerplanar: yes (%d vertices, %d edges)\n",
                    tl_graph_vertex_count(g), tl_graph_edge_count(g));
    } else {
        std::printf("outerplanar: no (%s)\n", reason ? reason : "");
    }
    tl_string_free(reason);
    tl_graph_free(g);
    return yes ? 0 : 1;
}

int run_draw(const std::string& input, const ParamFlags& p) {
    std::string text;
    if (!read_input(input, text)) {
        std::fprintf(stderr, "error: cannot read %s\n", input.c_str());
        return 2;
    }
    tl_draw_options opts;
    std::string err;
    if (!p.resolve(opts, err)) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        return 2;
    }
    tl_graph* g = nullptr;
    tl_status s = tl_graph_parse(text.c_str(), &g);
    if (s != TL_OK) return report_failure(s);

    tl_drawing* d = nullptr;
    s = tl_draw_graph(g, &opts, &d);
    tl_graph_free(g);
    if (s != TL_OK) return report_failure(s);
    int rc = emit_drawing(d, p);
    tl_drawing_free(d);
    return rc;
}

int run_tstar(int depth, const ParamFlags& p) {
    tl_draw_options opts;
    std::string err;
    if (!p.resolve(opts, err)) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        return 2;
    }
    tl_drawing* d = nullptr;
    tl_status s = tl_draw_tstar(depth, &opts, &d);
    if (s != TL_OK) return report_failure(s);
    int rc = emit_drawing(d, p);
    tl_drawing_free(d);
    return rc;
}

/// Turns the address-description JSON from the library into the text shape
/// both encode and decode print.
int print_description(char* json) {
    auto j = nlohmann::json::parse(json);
    tl_string_free(json);

    std::string address = j.at("address").get<std::string>();
    if (address.empty()) address = "(root)";

    auto join = [](const nlohmann::json& arr) {
        std::string s;
        for (const auto& v : arr) {
            if (!s.empty()) s += ",";
            s += std::to_string(v.get<std::uint64_t>());
        }
        return s;
    };

    std::printf("address: %s\n", address.c_str());
    std::printf("q=(%s) rho=(%s) m=%d, proper=%s\n",
                join(j.at("q")).c_str(), join(j.at("rho")).c_str(),
                j.at("m").get<int>(),
                j.at("proper").get<bool>() ? "true" : "false");
    std::printf("ty=%d\n", j.at("ty").get<int>());
    std::printf("position=%s\n",
                j.at("position_pretty").get<std::string>().c_str());
    return 0;
}

int run_encode(const std::string& address) {
    char* json = nullptr;
    tl_status s = tl_encode_address(address.c_str(), &json);
    if (s != TL_OK) return report_failure(s);
    return print_description(json);
}

int run_decode(const std::vector<std::uint32_t>& q,
               const std::vector<std::uint32_t>& rho, int m) {
    std::vector<std::uint8_t> rho8;
    rho8.reserve(rho.size());
    for (auto r : rho) {
        if (r > 1) {
            std::fprintf(stderr, "error: turn flags must be 0 or 1\n");
            return 2;
        }
        rho8.push_back(static_cast<std::uint8_t>(r));
    }
    char* json = nullptr;
    tl_status s =
        tl_decode_qr(q.data(), static_cast<int>(q.size()),
                     rho8.empty() ? nullptr : rho8.data(),
                     static_cast<int>(rho8.size()), m, &json);
    if (s != TL_OK) return report_failure(s);
    return print_description(json);
}

int run_selftest(int max_n, int depth) {
    int passed = 0;
    char* report = nullptr;
    tl_status s = tl_selftest(max_n, depth, &passed, &report);
    if (report != nullptr) {
        std::fputs(report, stdout);
        tl_string_free(report);
    }
    if (s == TL_OK) return 0;
    if (s == TL_ERR_VERIFY) return 3;
    return report_failure(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Certified drawings of outerplanar graphs with three edge lengths"};
    app.set_version_flag("--version", tl_version());
    app.require_subcommand(1);

    auto* check = app.add_subcommand(
        "check", "Decide whether a graph is outerplanar");
    std::string check_input;
    check->add_option("input", check_input,
                      "Graph file (edge list or JSON), '-' for stdin")
        ->required();

    auto* draw = app.add_subcommand(
        "draw", "Draw an outerplanar graph with three edge lengths");
    std::string draw_input;
    draw->add_option("input", draw_input,
                     "Graph file (edge list or JSON), '-' for stdin")
        ->required();
    ParamFlags draw_params;
    draw_params.attach(draw);

    auto* tstar = app.add_subcommand(
        "tstar", "Draw the depth-bounded portion of the infinite rhombus tree");
    int depth = 3;
    tstar->add_option("--depth", depth, "Tree depth (0..10)")
        ->check(CLI::Range(0, 10));
    ParamFlags tstar_params;
    tstar_params.attach(tstar);

    auto* encode = app.add_subcommand(
        "encode", "Run-length encode a tree address such as L,F,R");
    std::string address;
    encode->add_option("address", address,
                       "Comma-separated labels; omit for the root");

    auto* decode = app.add_subcommand(
        "decode", "Reconstruct the address of a run-length encoding");
    std::vector<std::uint32_t> q_list;
    std::vector<std::uint32_t> rho_list;
    int m = -1;
    decode->add_option("--q", q_list, "Fwd run counts, comma separated")
        ->delimiter(',')
        ->required();
    decode->add_option("--rho", rho_list,
                       "Turn flags (0 Left, 1 Right), comma separated")
        ->delimiter(',');
    decode->add_option("--m", m,
                       "Number of turns (default: the rho count)");

    auto* selftest = app.add_subcommand(
        "selftest", "Run the built-in consistency battery");
    int max_n = 0;
    int st_depth = 0;
    selftest->add_option("--max-n", max_n,
                         "Vertex budget for exhaustive sweeps (default 6)");
    selftest->add_option("--depth", st_depth,
                         "Tree depth for address sweeps (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(check)) return run_check(check_input);
    if (app.got_subcommand(draw)) return run_draw(draw_input, draw_params);
    if (app.got_subcommand(tstar)) return run_tstar(depth, tstar_params);
    if (app.got_subcommand(encode)) return run_encode(address);
    if (app.got_subcommand(decode)) return run_decode(q_list, rho_list, m);
    if (app.got_subcommand(selftest)) return run_selftest(max_n, st_depth);
    return 2;
}
