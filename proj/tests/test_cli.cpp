#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

static std::string g_cli;
static std::string g_fixtures;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_stdout.tmp";
    std::string cmd = g_cli + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("decompose reproduces the hand-checked curve and exits 0") {
    RunResult r = run_cli("decompose --input " + g_fixtures +
                          "/worked.csv --x0 1,0 --norm p2 --output worked_report.json");
    CHECK(r.exit_code == 0);
    auto report = nlohmann::json::parse(read_file("worked_report.json"));
    CHECK(report["residuals"]["decomposition"].get<double>() == 0.0);
    CHECK(report["failures"].get<int>() == 0);
    auto f1 = report["results"]["f1"];
    REQUIRE(f1.size() == 3);
    CHECK(f1[2]["value"][0].get<double>() == 3.0);
    CHECK(f1[2]["value"][1].get<double>() == 0.0);
    auto f2 = report["results"]["f2"];
    CHECK(f2[2]["value"][0].get<double>() == 2.0);
    CHECK(report["results"]["f1_increasing"].get<bool>());
    CHECK(report["results"]["f2_increasing"].get<bool>());
    std::remove("worked_report.json");
}

TEST_CASE("non-increasing grid exits 2 and names the node") {
    RunResult r = run_cli("decompose --input " + g_fixtures + "/bad_grid.csv --x0 1,0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("node") != std::string::npos);
}

TEST_CASE("malformed cell exits 2 with row and column") {
    RunResult r = run_cli("decompose --input " + g_fixtures + "/malformed.csv --x0 1,0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("row 3") != std::string::npos);
}

TEST_CASE("zero base vector exits 3") {
    RunResult r = run_cli("decompose --input " + g_fixtures + "/worked.csv --x0 0,0");
    CHECK(r.exit_code == 3);
}

TEST_CASE("out-of-range alpha exits 3") {
    RunResult r =
        run_cli("decompose --input " + g_fixtures + "/worked.csv --x0 1,0 --alpha 9");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify runs a suite and reports per-law counts") {
    RunResult r = run_cli("verify --suite bv --seed 7 --cases 20 --output bv_report.json");
    CHECK(r.exit_code == 0);
    auto report = nlohmann::json::parse(read_file("bv_report.json"));
    CHECK(report["failures"].get<int>() == 0);
    CHECK(report["results"].size() >= 1);
    CHECK(report["results"][0]["pass_counts"].size() >= 1);
    CHECK(report.contains("version"));
    std::remove("bv_report.json");
}

TEST_CASE("unknown suite exits 2") {
    RunResult r = run_cli("verify --suite nonsense");
    CHECK(r.exit_code == 2);
}

TEST_CASE("fault injection trips the harness and exits 1") {
    RunResult r = run_cli("verify --suite lattice --cases 5 --inject-fault");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify output is byte-identical across runs") {
    RunResult a =
        run_cli("verify --suite relations --seed 3 --cases 25 --output rep_a.json");
    RunResult b =
        run_cli("verify --suite relations --seed 3 --cases 25 --output rep_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(read_file("rep_a.json") == read_file("rep_b.json"));
    std::remove("rep_a.json");
    std::remove("rep_b.json");
}

TEST_CASE("cone command answers membership and order queries") {
    RunResult r = run_cli("cone --x0 3,4 --norm p2 --query 6,8 --query-pair \"0,0;3,4\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("member 6,8: yes") != std::string::npos);
    CHECK(r.output.find("leq 0,0;3,4: yes") != std::string::npos);
    CHECK(r.output.find("functional: 3,4") != std::string::npos);
    CHECK(r.output.find("alpha: 5") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <cli-binary> <fixtures-dir>\n");
        return 1;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];
    doctest::Context ctx;
    return ctx.run();
}
