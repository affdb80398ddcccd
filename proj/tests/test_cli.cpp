#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "'" + CHARCLASS_CLI_PATH + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("classify text output") {
    RunResult r = run_cli("classify --n 5 --k 2 --l 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("W(5,2; 1,2)") != std::string::npos);
    CHECK(r.output.find("p1 coefficient          24") != std::string::npos);
    CHECK(r.output.find("stably parallelizable   no") != std::string::npos);
}

TEST_CASE("classify json output") {
    RunResult r = run_cli("classify --n 5 --k 2 --l 1,2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["schema_version"] == "1");
    CHECK(j["input"]["n"] == 5);
    CHECK(j["input"]["l"] == nlohmann::json::array({1, 2}));
    CHECK(j["dimension"] == 15);
    CHECK(j["p1_coefficient"] == 24);
    CHECK(j["w2_coefficient"] == 0);
    CHECK(j["parallelizable"] == false);
    CHECK(!j.contains("derivation"));
}

TEST_CASE("classify explain adds the derivation") {
    RunResult r = run_cli("classify --n 5 --k 2 --l 1,2 --format json --explain");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.contains("derivation"));
    CHECK(j["derivation"].size() == 5);
    CHECK(j["derivation"][2]["total_class"] == "1 - 14*c + 86*c^2");
}

TEST_CASE("classify negative weights") {
    RunResult r = run_cli("classify --n 5 --k 2 --l 1,-2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["p1_coefficient"] == 16);
}

TEST_CASE("classify rejects non-manifold weights with exit 2") {
    RunResult r = run_cli("classify --n 5 --k 2 --l 2,4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("not a manifold: gcd(l) = 2") != std::string::npos);

    RunResult bad_n = run_cli("classify --n 1 --k 1 --l 1");
    CHECK(bad_n.exit_code == 2);

    RunResult bad_len = run_cli("classify --n 5 --k 2 --l 1,2,3");
    CHECK(bad_len.exit_code == 2);
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli("classify --n 5 --k 2").exit_code == 64);  // --l missing
    CHECK(run_cli("classify --n 5 --k 2 --l 1,x").exit_code == 64);
    CHECK(run_cli("classify --n 5 --k 2 --l 1,").exit_code == 64);
    CHECK(run_cli("classify --n 5 --k 2 --l 1,2 --format yaml").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);  // a subcommand is required
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("enumerate --n-max 1 --l-max 1 --out -").exit_code == 64);
    CHECK(run_cli("enumerate --n-max 3 --l-max 0 --out -").exit_code == 64);
    CHECK(run_cli("verify --samples 0").exit_code == 64);
    CHECK(run_cli("verify --degree-cap 1").exit_code == 64);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("classify --help").exit_code == 0);
}

TEST_CASE("enumerate tsv to stdout") {
    RunResult r = run_cli("enumerate --n-max 3 --l-max 1 --out -");
    CHECK(r.exit_code == 0);
    const std::string golden =
        "n\tk\tl\tdim\tparallelizable\tstably\tp1\tw2\tspan_cases\n"
        "2\t1\t1\t2\tfalse\ttrue\t2\t0\t\n"
        "2\t2\t1,1\t3\ttrue\ttrue\t4\t0\t\n"
        "3\t1\t1\t4\tfalse\tfalse\t3\t1\t\n"
        "3\t2\t1,1\t7\ttrue\ttrue\t6\t0\t\n"
        "3\t3\t1,1,1\t8\ttrue\ttrue\t9\t1\t1\n";
    CHECK(r.output == golden);
}

TEST_CASE("enumerate json lines") {
    RunResult r = run_cli("enumerate --n-max 3 --l-max 1 --out - --format json-lines");
    CHECK(r.exit_code == 0);
    std::vector<nlohmann::json> rows;
    std::size_t start = 0;
    while (start < r.output.size()) {
        std::size_t end = r.output.find('\n', start);
        if (end == std::string::npos)
            break;
        rows.push_back(nlohmann::json::parse(r.output.substr(start, end - start)));
        start = end + 1;
    }
    REQUIRE(rows.size() == 5);
    CHECK(rows[0]["n"] == 2);
    CHECK(rows[0]["k"] == 1);
    CHECK(rows[0]["dim"] == "2");
    CHECK(rows[4]["span_cases"] == "1");
}

TEST_CASE("enumerate writes files") {
    std::string path = "cli_enum_out.tsv";
    RunResult r = run_cli("enumerate --n-max 3 --l-max 1 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header == "n\tk\tl\tdim\tparallelizable\tstably\tp1\tw2\tspan_cases");
    file.close();
    std::remove(path.c_str());

    RunResult bad = run_cli("enumerate --n-max 3 --l-max 1 --out /nonexistent-dir/x.tsv");
    CHECK(bad.exit_code == 74);
}

TEST_CASE("verify runs every suite deterministically") {
    RunResult first = run_cli("verify --samples 20 --seed 7");
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("seed 7, samples 20") != std::string::npos);
    CHECK(first.output.find("all 19 suites passed") != std::string::npos);
    CHECK(first.output.find("ring.axioms") != std::string::npos);
    CHECK(first.output.find("classify.three_way_agreement") != std::string::npos);

    RunResult second = run_cli("verify --samples 20 --seed 7");
    CHECK(second.output == first.output);
}

TEST_CASE("CHARCLASS_SEED overrides the seed flag") {
    RunResult r = run_cli("verify --samples 20 --seed 7", "CHARCLASS_SEED=99 ");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("seed 99, samples 20") != std::string::npos);

    RunResult bad = run_cli("verify --samples 20", "CHARCLASS_SEED=banana ");
    CHECK(bad.exit_code == 64);
    CHECK(bad.output.find("CHARCLASS_SEED") != std::string::npos);
}

TEST_CASE("verify honors the degree cap flag") {
    RunResult r = run_cli("verify --samples 20 --seed 3 --degree-cap 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degree cap 4") != std::string::npos);
}
