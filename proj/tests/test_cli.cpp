#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(SLICELAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("slice subcommand emits the full JSON report") {
    const CliResult r = run_cli("slice --normal 1,1,1,1 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["verdict"] == "NotZonoid");
    CHECK(j["volume_exact"] == "4/3");
    CHECK(j["witness"]["class"] == "Triangle");
    CHECK(j["facet_census"]["Triangle"] == 8);
}

TEST_CASE("slice accepts rational normals and section levels") {
    const CliResult r =
        run_cli("slice --normal 1/2,1/2,1/2,1/2 --section 0,-1/4,-1/2 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["normal"] == nlohmann::json::array({"1", "1", "1", "1"}));
    REQUIRE(j["sections"].size() == 3);
    CHECK(j["sections"][1]["chart_area"] == "11/16");
}

TEST_CASE("catalog gate exits zero and prints every row") {
    const CliResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("MISS") == std::string::npos);
    CHECK(r.output.find("trapezium face") != std::string::npos);
}

TEST_CASE("integral subcommand") {
    const CliResult p4 = run_cli("integral --p 4");
    CHECK(p4.exit_code == 0);
    CHECK(p4.output.find("0.6666666") != std::string::npos);

    const CliResult p2 = run_cli("integral --p 2");
    CHECK(p2.exit_code == 0);
    CHECK(p2.output.find("equality") != std::string::npos);

    const CliResult vol = run_cli("integral --normal 1,1,1,1 --tol 1e-8");
    CHECK(vol.exit_code == 0);
    CHECK(vol.output.find("1.33333333") != std::string::npos);
}

TEST_CASE("census and project subcommands") {
    const CliResult census = run_cli("census --normal 1,1,1,1");
    CHECK(census.exit_code == 0);
    CHECK(census.output.find("Triangle x 8") != std::string::npos);

    const CliResult proj = run_cli("project --normal 1,1,1 --json");
    CHECK(proj.exit_code == 0);
    const auto j = nlohmann::json::parse(proj.output);
    CHECK(j["vertex_count"] == 6);
    CHECK(j["chart_dimension"] == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("slice --normal banana").exit_code == 2);
    CHECK(run_cli("slice").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("slice --normal 0,0").exit_code == 2);   // the zero vector is no hyperplane
    CHECK(run_cli("slice --normal 1,1 --frob").exit_code == 2);
    CHECK(run_cli("integral --p 1").exit_code == 2);
    CHECK(run_cli("integral").exit_code == 2);
    CHECK(run_cli("slice --normal 1,0").exit_code == 0);   // zero entries are allowed
}

TEST_CASE("output is deterministic, also across thread caps") {
    const CliResult a = run_cli("slice --normal 2,1,1,1 --section 0,1/4 --json");
    const CliResult b = run_cli("slice --normal 2,1,1,1 --section 0,1/4 --json");
    const CliResult c =
        run_cli("slice --normal 2,1,1,1 --section 0,1/4 --json", "SLICE_LAB_THREADS=1");
    const CliResult d =
        run_cli("slice --normal 2,1,1,1 --section 0,1/4 --json", "SLICE_LAB_THREADS=7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    CHECK(a.output == d.output);
}
