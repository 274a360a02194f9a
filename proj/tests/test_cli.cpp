#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// End-to-end checks against the installed binary; the path is injected by
// the build.
#ifndef DILOGEQ_CLI_PATH
#error "DILOGEQ_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout only; diagnostics go to stderr
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/dilogeq_cli_test.out";
    const std::string err_path = "/tmp/dilogeq_cli_test.err";
    std::string cmd =
        std::string(DILOGEQ_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

nlohmann::ordered_json parse(const std::string& s) { return nlohmann::ordered_json::parse(s); }

}  // namespace

TEST_CASE("chords subcommand lists chi_n") {
    auto r5 = run_cli("chords --n 5");
    CHECK(r5.code == 0);
    CHECK(r5.out.find("5 chords") != std::string::npos);

    auto r4 = run_cli("chords --n 4 --format json");
    CHECK(r4.code == 0);
    auto j4 = parse(r4.out);
    CHECK(j4["chord_count"] == 2);
    CHECK(j4["chords"] == nlohmann::ordered_json::parse("[[1,3],[2,4]]"));
    CHECK(j4["crossing_sets"]["1,3"] == nlohmann::ordered_json::parse("[[2,4]]"));

    auto r6 = run_cli("chords --n 6 --format json");
    CHECK(parse(r6.out)["chords"].size() == 9);

    CHECK(run_cli("chords --n 3").code == 2);
    CHECK(run_cli("chords").code == 2);
    CHECK(run_cli("nonsense --n 5").code == 2);
}

TEST_CASE("verify subcommand checks the equation") {
    auto r = run_cli("verify --n 5 --samples 20 --format json");
    CHECK(r.code == 0);
    auto j = parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["constant_L1"] == "3/1");
    CHECK(j["max_residual"].get<double>() <= 1e-10);

    CHECK(run_cli("verify --n 12 --samples 100").code == 0);
    CHECK(run_cli("verify --n 3").code == 2);
    // An unreachable tolerance reports failure through the exit code.
    CHECK(run_cli("verify --n 8 --samples 5 --tol 1e-18").code == 1);
}

TEST_CASE("wedge subcommand reports exact cancellation") {
    auto r = run_cli("wedge --n 20 --format json");
    CHECK(r.code == 0);
    auto j = parse(r.out);
    CHECK(j["zero"] == true);
    CHECK(j["terms"].empty());
    CHECK(run_cli("wedge --n 4").code == 0);
}

TEST_CASE("certify subcommand emits schema documents and is deterministic") {
    for (int n : {4, 6, 7, 8}) {
        auto r = run_cli("certify --n " + std::to_string(n) + " --samples 10 --format json");
        CHECK(r.code == 0);
    }

    auto a = run_cli("certify --n 8 --samples 5 --format json");
    auto b = run_cli("certify --n 8 --samples 5 --format json");
    CHECK(a.out == b.out);  // byte-identical for identical configuration

    auto j = parse(a.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "case", "instances", "expansion_ok"});
    CHECK(j["case"] == "even");
    CHECK(j["expansion_ok"] == true);
    CHECK(j["instances"].size() == 16);

    auto six = parse(run_cli("certify --n 6 --samples 5 --format json").out);
    CHECK(six["case"] == "six");
    CHECK(six["instances"].size() == 7);

    // --out writes the same document to a file.
    const std::string path = "/tmp/dilogeq_cli_test_cert.json";
    auto r = run_cli("certify --n 8 --samples 5 --format json --out " + path);
    CHECK(r.code == 0);
    CHECK(slurp(path) == a.out);
    std::remove(path.c_str());
}

TEST_CASE("verify JSON output is byte-identical across runs") {
    auto a = run_cli("verify --n 7 --samples 10 --seed 3 --format json");
    auto b = run_cli("verify --n 7 --samples 10 --seed 3 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("verify --n 7 --samples 10 --seed 4 --format json");
    CHECK(parse(c.out)["seed"] == 4);
}

TEST_CASE("degenerate subcommand") {
    auto r = run_cli("degenerate --n 5 --chord 1,4 --format json");
    CHECK(r.code == 0);
    auto j = parse(r.out);
    CHECK(j["forced_one"] == nlohmann::ordered_json::parse("[[2,5],[3,5]]"));
    CHECK(j["split_sizes"] == nlohmann::ordered_json::parse("[4,3]"));
    CHECK(j["note"].get<std::string>().find("reflection") != std::string::npos);

    auto t = run_cli("degenerate --n 5 --chord 1,4");
    CHECK(t.out.find("u{2,5}") != std::string::npos);
    CHECK(t.out.find("reflection") != std::string::npos);

    auto s = parse(run_cli("degenerate --n 6 --chord 1,3 --format json").out);
    CHECK(s["split_sizes"] == nlohmann::ordered_json::parse("[3,5]"));

    CHECK(run_cli("degenerate --n 5 --chord 1,2").code == 2);
    CHECK(run_cli("degenerate --n 5 --chord banana").code == 2);
    CHECK(run_cli("degenerate --n 5").code == 2);
}
