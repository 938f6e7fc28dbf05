// Exercises the installed command-line surface through a real subprocess:
// exit-code contract, JSON output, batch files, and the selftest driver.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(ISHARP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("torus subcommand reports the trefoil") {
    const CommandResult r = run_cli("torus 2 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim KHI               : 3") != std::string::npos);
    CHECK(r.output.find("dim I#(C)             : 4") != std::string::npos);
    CHECK(r.output.find("torsion_proved") != std::string::npos);
}

TEST_CASE("json flag emits schema 1") {
    const CommandResult r = run_cli("torus 2 3 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema"] == "1");
    CHECK(j["dim_khi"] == 3);
    CHECK(j["rank_d1"] == 1);
    CHECK(j["dim_isharp_c"] == 4);
    CHECK(j["torsion"]["verdict"] == "torsion_proved");
}

TEST_CASE("exit codes: 2 for non-L-space, 1 for parse errors") {
    CHECK(run_cli("alexander \"-t + 3 - t^-1\"").exit_code == 2);
    CHECK(run_cli("alexander \"t + garbage\"").exit_code == 1);
    CHECK(run_cli("torus 2 4").exit_code == 1);
    CHECK(run_cli("staircase 0").exit_code == 0);
    CHECK(run_cli("staircase 1 2").exit_code == 1);
}

TEST_CASE("scalar flags are honored") {
    const CommandResult r = run_cli("torus 2 5 --c-plus 3/2 --c-minus -1 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["c_plus"] == "3/2");
    CHECK(j["c_minus"] == "-1");
    CHECK(j["rank_d1"] == 2);
}

TEST_CASE("batch file with comments") {
    const std::string path = "cli_test_batch.txt";
    {
        std::ofstream f(path);
        f << "# first torus knots\n"
          << "torus 2 3\n"
          << "\n"
          << "staircase 0 2 3\n"
          << "alexander t^2 - t + 1 - t^-1 + t^-2\n";
    }
    const CommandResult r = run_cli("batch " + path + " --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["input"] == "torus 2 3");
    CHECK(j[1]["dim_isharp_c"] == 6);
    CHECK(j[2]["dim_isharp_c"] == 6);
    std::remove(path.c_str());
}

TEST_CASE("batch propagates the strongest error exit code") {
    const std::string path = "cli_test_batch_err.txt";
    {
        std::ofstream f(path);
        f << "torus 2 3\nalexander -t + 3 - t^-1\n";
    }
    const CommandResult r = run_cli("batch " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("selftest subcommand is deterministic and exits zero") {
    const CommandResult a = run_cli("selftest cone --seed 42 --cases 25");
    const CommandResult b = run_cli("selftest cone --seed 42 --cases 25");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("PASS") != std::string::npos);

    CHECK(run_cli("selftest octahedral --cases 20").exit_code == 0);
    CHECK(run_cli("selftest nosuchsuite").exit_code == 1);
}
