// End-to-end tests that spawn the real CLI binary. The binary path arrives
// as the first plain argument (wired up by CTest), or via MODCOUNT_CLI.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "json.hpp"

namespace {

std::string g_cli_path;

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string &args, const std::string &env = "") {
    std::string cmd;
    if (!env.empty()) {
        cmd += env + " ";
    }
    cmd += "'" + g_cli_path + "' " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) {
        result.output.append(buffer, got);
    }
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("scalar commands print bare values") {
    CHECK(run_cli("ramanujan 6 4").output == "-1\n");
    CHECK(run_cli("ramanujan 5 0").output == "4\n");
    CHECK(run_cli("ramanujan 5 1").output == "-1\n");
    CHECK(run_cli("count 5 2 0").output == "4\n");
    CHECK(run_cli("count 5 2 0 --unordered").output == "2\n");
    CHECK(run_cli("count 6 2 1 --positive").output == "4\n");
    CHECK(run_cli("subset-sum 5 0").output == "8\n");
    CHECK(run_cli("subset-sum 5 0 --exclude-n").output == "4\n");
    CHECK(run_cli("vt size 5 0").output == "6\n");
    CHECK(run_cli("necklace 2 5").output == "6\n");
    CHECK(run_cli("necklace 2 5 --quasi").output == "3\n");
    CHECK(run_cli("necklace 3 1 --quasi").output == "3/2\n");
    CHECK(run_cli("necklace --density 3 6").output == "4\n");
    CHECK(run_cli("necklace --density 3 6 --lyndon").output == "3\n");
    CHECK(run_cli("count 7 2 -3").status == 0);
}

TEST_CASE("weight distribution and enumeration text formats") {
    CHECK(run_cli("vt weights 5 0").output == "[1,0,2,2,1,0]\n");
    const RunResult r = run_cli("vt enum 5 0");
    CHECK(r.status == 0);
    CHECK(lines_of(r.output) == std::vector<std::string>{"00000", "00111", "01010",
                                                         "10001", "11011", "11100"});
}

TEST_CASE("json records round-trip through a parser") {
    const RunResult r = run_cli("--json vt size 5 0");
    REQUIRE(r.status == 0);
    const nlohmann::json record = nlohmann::json::parse(r.output);
    CHECK(record["command"] == "vt size");
    CHECK(record["params"]["n"] == 5);
    CHECK(record["params"]["b"] == 0);
    CHECK(record["result"] == "6");
    CHECK(record["elapsed_ms"].is_number());

    const nlohmann::json weights =
        nlohmann::json::parse(run_cli("vt weights 5 0 --json").output);
    CHECK(weights["result"] ==
          nlohmann::json::array({"1", "0", "2", "2", "1", "0"}));

    // big counts stay decimal strings, immune to double rounding
    const nlohmann::json big =
        nlohmann::json::parse(run_cli("--json vt size 200 0").output);
    REQUIRE(big["result"].is_string());
    const std::string digits = big["result"].get<std::string>();
    CHECK(digits.size() > 50);
    CHECK(digits.find_first_not_of("0123456789") == std::string::npos);

    const nlohmann::json verify =
        nlohmann::json::parse(run_cli("--json verify --suite necklace --max-n 6").output);
    CHECK(verify["result"]["passed"] == true);
    CHECK(verify["result"]["checks"].is_array());
}

TEST_CASE("csv output has a header and ascending rows") {
    CHECK(run_cli("--csv count 5 2 0").output == "n,k,b,value\n5,2,0,4\n");
    CHECK(run_cli("--csv ramanujan 2 1 --table").output ==
          "n,m,value\n1,0,1\n1,1,1\n2,0,1\n2,1,-1\n");
    const std::vector<std::string> lines =
        lines_of(run_cli("--csv vt weights 5 0").output);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "n,b,k,count");
    CHECK(lines[1] == "5,0,0,1");
    CHECK(lines[6] == "5,0,5,0");
    // check names containing commas come out quoted
    const std::string report = run_cli("--csv verify --suite vt --max-n 3").output;
    CHECK(report.find("\"enumeration sorted, members only, size consistent\"") !=
          std::string::npos);
}

TEST_CASE("exit codes distinguish usage, capacity, and mismatch") {
    CHECK(run_cli("count 0 1 0").status == 2);
    CHECK(run_cli("count 5 2 0 --positive --unordered").status == 2);
    CHECK(run_cli("vt enum 30 0").status == 3);
    CHECK(run_cli("--json --csv ramanujan 6 4").status == 2);
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("verify --suite nope").status == 2);
    CHECK(run_cli("necklace 2 5 --lyndon").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("verify --suite vt --max-n 40").status == 3); // oracle cap
}

TEST_CASE("environment variable overrides the enumeration cap") {
    CHECK(run_cli("vt enum 5 0", "MODCOUNT_ENUM_CAP=4").status == 3);
    const RunResult ok = run_cli("vt enum 5 0", "MODCOUNT_ENUM_CAP=5");
    CHECK(ok.status == 0);
    CHECK(lines_of(ok.output).size() == 6);
    CHECK(run_cli("vt enum 5 0", "MODCOUNT_ENUM_CAP=junk").status == 2);
}

TEST_CASE("verify reports each check and totals") {
    const RunResult r = run_cli("verify --suite necklace --max-n 8");
    CHECK(r.status == 0);
    CHECK(r.output.find("ok   fixed-density necklaces vs rotation classes") !=
          std::string::npos);
    CHECK(r.output.find("0 failures") != std::string::npos);
    CHECK(run_cli("--quiet verify --suite arith --max-n 6").output.empty());
    CHECK(run_cli("verify --suite all --max-n 1").status == 0);
}

int main(int argc, char **argv) {
    std::vector<char *> args;
    args.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (g_cli_path.empty() && argv[i][0] != '-') {
            g_cli_path = argv[i];
            continue;
        }
        args.push_back(argv[i]);
    }
    if (g_cli_path.empty()) {
        if (const char *env = std::getenv("MODCOUNT_CLI")) {
            g_cli_path = env;
        }
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path to modcount binary>\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(args.size()), args.data());
    return context.run();
}
