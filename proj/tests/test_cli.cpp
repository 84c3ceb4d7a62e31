#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string temp_path() {
    static int counter = 0;
    return "/tmp/derange_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
}

// Runs the CLI with the given arguments (and optional environment prefix),
// capturing stdout+stderr and the exit code.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = temp_path();
    const std::string cmd = env_prefix + std::string(CLI_BINARY_PATH) + " " + args + " >" + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    REQUIRE(raw != -1);
    REQUIRE(WIFEXITED(raw));
    result.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    std::remove(out_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("compute subcommand prints exact values") {
    CHECK(run_cli("compute derangement 5").output == "44\n");
    CHECK(run_cli("compute derangement 10 --method series").output == "1334961\n");
    CHECK(run_cli("compute derangement 10 --method nearest").output == "1334961\n");
    CHECK(run_cli("compute sum 2").output == "2\n");
    CHECK(run_cli("compute sum 4").output == "44\n");
    CHECK(run_cli("compute floor 5").output == "44\n");
    CHECK(run_cli("compute a 4").output == "8\n");
    CHECK(run_cli("compute derangement 5").exit_code == 0);
}

TEST_CASE("compute emits machine-readable values as strings") {
    const RunResult r = run_cli("compute derangement 25 --format json-lines");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["kind"] == "derangement");
    CHECK(j["n"] == 25);
    CHECK(j["method"] == "table");
    CHECK(j["value"] == "5706255282633466762357224");
}

TEST_CASE("table emits mutually consistent columns in all formats") {
    const RunResult plain = run_cli("table 2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output ==
          "n derangement sum a floor\n"
          "0 1 0 0 0\n"
          "1 0 0 0 0\n"
          "2 1 2 2 2\n");

    const RunResult csv = run_cli("table 20 --format csv");
    const RunResult json = run_cli("table 20 --format json-lines");
    const auto csv_lines = lines_of(csv.output);
    const auto json_lines = lines_of(json.output);
    REQUIRE(csv_lines.size() == 22);  // header + 21 rows
    REQUIRE(json_lines.size() == 21);
    CHECK(csv_lines[0] == "n,derangement,sum,a,floor");
    for (std::size_t i = 0; i < json_lines.size(); ++i) {
        const nlohmann::json row = nlohmann::json::parse(json_lines[i]);
        std::stringstream expected;
        expected << row["n"].get<int>() << "," << row["derangement"].get<std::string>() << ","
                 << row["sum"].get<std::string>() << "," << row["a"].get<std::string>() << ","
                 << row["floor"].get<std::string>();
        CHECK(csv_lines[i + 1] == expected.str());
        // The theorem under test, visible right in the output rows.
        CHECK(row["sum"] == row["a"]);
        CHECK(row["sum"] == row["floor"]);
    }
    const nlohmann::json last = nlohmann::json::parse(json_lines.back());
    CHECK(last["n"] == 20);
    CHECK(last["derangement"] == "895014631192902121");
}

TEST_CASE("verify subcommand reports pass/fail with matching exit codes") {
    const RunResult ok = run_cli("verify theorem1 --quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("theorem1: PASS") != std::string::npos);

    const RunResult all = run_cli("verify all --quick");
    CHECK(all.exit_code == 0);
    CHECK(lines_of(all.output).size() == 13);

    const RunResult fail = run_cli("verify has1 --min 0 --max 3");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("has1: FAIL") != std::string::npos);

    const RunResult json = run_cli("verify has1 --min 0 --max 3 --format json-lines");
    CHECK(json.exit_code == 1);
    const nlohmann::json j = nlohmann::json::parse(json.output);
    CHECK(j["pass"] == false);
    CHECK(j["failures"].size() == 1);
}

TEST_CASE("verify output is deterministic") {
    const std::string args = "verify hermite --cases 100 --seed 3 --format json-lines";
    CHECK(run_cli(args).output == run_cli(args).output);
    CHECK(run_cli("table 50").output == run_cli("table 50").output);
}

TEST_CASE("verify writes to a file with --output") {
    const std::string path = temp_path();
    const RunResult r = run_cli("verify theorem1 --quick --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("theorem1: PASS") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("quadcheck passes at its default tolerance") {
    const RunResult r = run_cli("quadcheck --max-n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("quadcheck: PASS") != std::string::npos);

    const RunResult json = run_cli("quadcheck --max-n 2 --format json-lines");
    CHECK(json.exit_code == 0);
    for (const std::string& line : lines_of(json.output)) {
        const nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["pass"] == true);
        CHECK(j["rel_err"].get<double>() <= 1e-8);
    }
}

TEST_CASE("usage errors exit with code 2, help with 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("compute bogus 5").exit_code == 2);
    CHECK(run_cli("compute derangement -3").exit_code == 2);
    CHECK(run_cli("compute derangement 0 --method nearest").exit_code == 2);
    CHECK(run_cli("compute sum 3 --method series").exit_code == 2);
    CHECK(run_cli("table 501").exit_code == 2);
    CHECK(run_cli("verify nonsense").exit_code == 2);
    CHECK(run_cli("verify theorem1 --min 3").exit_code == 2);
    CHECK(run_cli("verify toprove --max 400").exit_code == 2);
    CHECK(run_cli("verify hermite --max 5").exit_code == 2);
    CHECK(run_cli("quadcheck --max-n 13").exit_code == 2);
    CHECK(run_cli("quadcheck --tol 1e-15").exit_code == 2);
}

TEST_CASE("precision cap environment override") {
    CHECK(run_cli("compute floor 5", "DERANGE_PRECISION_CAP=abc ").exit_code == 2);
    const RunResult ok = run_cli("compute floor 5", "DERANGE_PRECISION_CAP=64 ");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "44\n");
    const RunResult exhausted = run_cli("compute floor 500", "DERANGE_PRECISION_CAP=2 ");
    CHECK(exhausted.exit_code == 1);
    CHECK(exhausted.output.find("precision cap") != std::string::npos);
}
