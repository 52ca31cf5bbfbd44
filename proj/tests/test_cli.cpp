// Exit-code contract and golden-report tests for the command-line tool.
// 0 = all checks pass, 1 = some check failed, 2 = usage error, 3 = internal.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "cli_test_output.txt";
    std::string cmd = std::string("\"") + CVF_CLI_PATH + "\" " + args + " > " + out_file +
                      " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return RunResult{rc == -1 ? -1 : WEXITSTATUS(rc), ss.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json normalized(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    for (auto& check : doc["checks"]) check["millis"] = 0;
    return doc;
}

} // namespace

TEST_CASE("passing suite exits 0") {
    auto run = run_cli("verify weyl-torus");
    CHECK(run.exit_code == 0);
    CHECK(run.output.find("weyl.kernel") != std::string::npos);
    CHECK(run.output.find("reported") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("verify bogus-suite").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify circle --samples 0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("an injected fault makes verify exit 1 with a witness") {
    auto run = run_cli("verify sl2-witt --inject-fault psi3-sign --max-k 4 --samples 5");
    CHECK(run.exit_code == 1);
    CHECK(run.output.find("witt.relations") != std::string::npos);
    CHECK(run.output.find("g=[") != std::string::npos); // witness sample point
}

TEST_CASE("apply prints canonical forms") {
    auto a = run_cli("apply \"Psi(1)\" \"I(2)\"");
    CHECK(a.exit_code == 0);
    CHECK(a.output == "2*I(3) - 2*I(1)\n");

    auto b = run_cli("apply \"D\" \"beta^2\"");
    CHECK(b.exit_code == 0);
    CHECK(b.output == "0\n");

    auto c = run_cli("apply \"Psi(1)\" \"1\"");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "0\n");

    auto d = run_cli("apply \"Delta\" \"beta^2 * J(1)\"");
    CHECK(d.exit_code == 0);
    CHECK(d.output == "beta^2 * (15*tr)\n");
}

TEST_CASE("leading-dash operator expressions pass through the separator") {
    auto run = run_cli("apply -- \"-J(3)*Delta + J(1)*Psi(1)^2 + (J(2)+4)*Psi(1)\" \"beta^2 * J(1)\"");
    CHECK(run.exit_code == 0);
    CHECK(run.output == "beta^2 * (-24*tr^2 - 16)\n");
}

TEST_CASE("apply parse errors exit 2 and carry a position") {
    auto run = run_cli("apply \"Psi(1\" \"I(2)\"");
    CHECK(run.exit_code == 2);
    CHECK(run.output.find("position") != std::string::npos);
}

TEST_CASE("degree overflow exits 3 with a suggested bound") {
    auto run = run_cli("apply \"Psi(1)\" \"I(6)\" --degree-bound 3");
    CHECK(run.exit_code == 3);
    CHECK(run.output.find("--degree-bound") != std::string::npos);
}

TEST_CASE("json report matches the golden file up to runtimes") {
    const std::string json_file = "cli_test_report.json";
    auto run = run_cli("verify weyl-torus --json " + json_file);
    REQUIRE(run.exit_code == 0);
    auto got = normalized(read_file(json_file));
    auto want = normalized(read_file(std::string(CVF_GOLDEN_DIR) + "/weyl_report.json"));
    CHECK(got == want);
}
