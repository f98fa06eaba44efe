#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef TRILENGTH_CLI_PATH
#error "TRILENGTH_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Runs `sh -c <command>` capturing stdout; stderr is discarded unless the
/// command redirects it itself.
RunResult run(const std::string& args, const std::string& stdin_text = "",
              const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(TRILENGTH_CLI_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        // %b expands the \n escapes in the test fixtures.
        cmd = "printf '%b' '" + stdin_text + "' | " + cmd;
    }
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kC5 = "0 1\\n1 2\\n2 3\\n3 4\\n0 4\\n";
const std::string kK4 = "0 1\\n0 2\\n0 3\\n1 2\\n1 3\\n2 3\\n";

} // namespace

TEST_CASE("check accepts, rejects, and reports parse failures") {
    RunResult yes = run("check -", kC5);
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("outerplanar: yes") != std::string::npos);

    RunResult no = run("check -", kK4);
    CHECK(no.exit_code == 1);
    CHECK(no.out.find("outerplanar: no") != std::string::npos);

    RunResult bad = run("check -", "not a graph");
    CHECK(bad.exit_code == 2);

    RunResult missing = run("check /no/such/file");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("draw reproduces target lengths in JSON output") {
    RunResult r = run("draw - --lengths 1,0.8,0.55", kC5);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto lengths = j.at("class_lengths").get<std::vector<double>>();
    REQUIRE(lengths.size() == 3);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths[0] == doctest::Approx(0.55).epsilon(1e-9));
    CHECK(lengths[1] == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(lengths[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j.at("vertices").size() == 5);
    CHECK(j.at("edges").size() == 7);
}

TEST_CASE("draw is deterministic for a fixed seed") {
    RunResult a = run("draw - --seed 42", kC5);
    RunResult b = run("draw - --seed 42", kC5);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run("draw - --seed 43", kC5);
    CHECK(a.out != c.out);

    // The environment variable supplies the default seed.
    RunResult env = run("draw -", kC5, "TRILENGTH_SEED=42");
    CHECK(env.out == a.out);

    RunResult bad_env = run("draw -", kC5, "TRILENGTH_SEED=nonsense");
    CHECK(bad_env.exit_code == 2);
}

TEST_CASE("draw rejections use the documented exit codes") {
    CHECK(run("draw - --seed 1", kK4).exit_code == 1);       // domain
    CHECK(run("draw - --seed 1", "junk").exit_code == 2);    // parse
    CHECK(run("draw - --seed 1 --lengths 1,2,3", kC5).exit_code == 2);
    CHECK(run("draw - --theta0 1.0", kC5).exit_code == 2);   // needs theta1
    CHECK(run("draw - --lengths 1,2", kC5).exit_code == 2);  // arity
    CHECK(run("draw - --scale 2.0", kC5).exit_code == 2);    // needs angles
    // Equal angles collapse two vertices of the depth-2 portion exactly:
    // certification refuses to emit.
    CHECK(run("tstar --depth 2 --theta0 1.0 --theta1 1.0").exit_code == 3);
}

TEST_CASE("draw writes SVG with -o") {
    std::string path = "/tmp/trilength_cli_test.svg";
    std::remove(path.c_str());
    RunResult r = run("draw - --seed 3 --format svg -o " + path, kC5);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.rfind("<svg", 0) == 0);
    CHECK(text.find("</svg>") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("tstar draws the finite portion") {
    RunResult r = run("tstar --depth 0 --seed 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("vertices").size() == 4);
    CHECK(j.at("edges").size() == 5);

    RunResult svg1 = run("tstar --depth 2 --seed 2 --format svg");
    RunResult svg2 = run("tstar --depth 2 --seed 2 --format svg");
    REQUIRE(svg1.exit_code == 0);
    CHECK(svg1.out == svg2.out);
    CHECK(svg1.out.rfind("<svg", 0) == 0);

    CHECK(run("tstar --depth 11").exit_code == 2); // out of accepted range
}

TEST_CASE("encode prints the derived values") {
    RunResult r = run("encode L,F,L,L");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("address: L,F,L,L") != std::string::npos);
    CHECK(r.out.find("q=(0,1,0,0) rho=(0,0,0) m=3, proper=false") !=
          std::string::npos);
    CHECK(r.out.find("ty=1") != std::string::npos);
    CHECK(r.out.find("position=x0^2") != std::string::npos);

    RunResult lff = run("encode L,F,F");
    CHECK(lff.out.find("q=(0,2) rho=(0) m=1, proper=false") !=
          std::string::npos);
    CHECK(lff.out.find("position=2*x0^2") != std::string::npos);

    RunResult root = run("encode");
    CHECK(root.exit_code == 0);
    CHECK(root.out.find("address: (root)") != std::string::npos);

    CHECK(run("encode L,Q").exit_code == 2);
}

TEST_CASE("decode prints the reconstructed address") {
    RunResult r = run("decode --q 0,0 --rho 1 --m 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("address: R") != std::string::npos);
    CHECK(r.out.find("proper=true") != std::string::npos);

    RunResult nom = run("decode --q 2");
    REQUIRE(nom.exit_code == 0);
    CHECK(nom.out.find("address: F,F") != std::string::npos);

    CHECK(run("decode --q 0,0 --rho 1 --m 3").exit_code == 2); // mismatch
    CHECK(run("decode --rho 1").exit_code == 2); // --q required
    CHECK(run("decode --q 0,0 --rho 7").exit_code == 2);
}

TEST_CASE("selftest passes at reduced size") {
    RunResult r = run("selftest --max-n 4 --depth 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selftest: 11/11") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("top-level argument errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--version").exit_code == 0);
    CHECK(run("--help").exit_code == 0);
}
