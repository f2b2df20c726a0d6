#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef CLI_PATH
#error "CLI_PATH must point at the nakayama binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze a linear series") {
    RunResult r = run("analyze \"[3,4,4,3,2,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "gldim: 3"));
    CHECK(contains(r.output, "magnitude: 2"));
    CHECK(contains(r.output, "classification: connected-linear"));
    CHECK(contains(r.output, "cartan_determinant: 1"));
}

TEST_CASE("analyze a cyclic series") {
    RunResult r = run("analyze \"cyclic:[3,3,3,4]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "gldim: 5"));
    CHECK(contains(r.output, "magnitude: 1"));
    CHECK(contains(r.output, "weight 1"));
}

TEST_CASE("analyze an infinite-gldim series") {
    RunResult r = run("analyze \"cyclic:[2,2]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "gldim: infinite"));
    CHECK(contains(r.output, "cartan_determinant: 0"));
    CHECK(contains(r.output, "undefined"));
}

TEST_CASE("analyze a path word") {
    RunResult r = run("analyze UUDUDD");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "classification: dyck-path"));
    CHECK(contains(r.output, "height: 2"));
}

TEST_CASE("analyze JSON round-trips the series") {
    RunResult r = run("--format json analyze \"cyclic:[3,3,3,4]\"");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["gldim"] == 5);
    CHECK(j["magnitude"]["num"] == 1);
    CHECK(j["magnitude"]["den"] == 1);
    CHECK(j["resolution_quiver"]["components"] == 1);
    CHECK(j["resolution_quiver"]["successors"] ==
          nlohmann::json::parse("[3,0,1,3]"));

    // feed the reported input back in and expect the same report
    std::string again = "--format json analyze \"" + j["input"].get<std::string>() + "\"";
    RunResult r2 = run(again);
    REQUIRE(r2.exit_code == 0);
    CHECK(nlohmann::json::parse(r2.output) == j);
}

TEST_CASE("exit codes") {
    CHECK(run("analyze \"[3,oops]\"").exit_code == 2);
    CHECK(run("analyze \"[2,2]\"").exit_code == 2);   // invalid linear series
    CHECK(run("bijection sincere --to-dyck \"cyclic:[2,2]\"").exit_code == 3);
    CHECK(run("bijection m1 --to-dyck \"cyclic:[2,2]\"").exit_code == 3);
    CHECK(run("enumerate nonsense --n 3").exit_code == 2);
    CHECK(run("nonsense").exit_code != 0);
}

TEST_CASE("bijection subcommand") {
    RunResult r = run("bijection sincere --from-dyck \"[3,4,4,3,2,1]\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "cyclic:[6,8,9,9,8,7]"));

    RunResult back = run("bijection sincere --to-dyck \"cyclic:[6,8,9,9,8,7]\"");
    CHECK(back.exit_code == 0);

    RunResult lin = run("bijection linear --to-dyck \"[3,4,4,3,2,1]\"");
    CHECK(lin.exit_code == 0);
    RunResult lin_back = run("bijection linear --from-dyck \"" +
                             lin.output.substr(0, lin.output.find('\n')) + "\"");
    CHECK(lin_back.exit_code == 0);
    CHECK(contains(lin_back.output, "[3,4,4,3,2,1]"));

    RunResult both = run("bijection linear --from-dyck UD --to-dyck \"[2,1]\"");
    CHECK(both.exit_code == 2);
}

TEST_CASE("enumerate subcommand") {
    RunResult r = run("enumerate linear --n 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[2,2,1]"));
    CHECK(contains(r.output, "[3,2,1]"));
    CHECK(contains(r.output, "total: 2"));

    RunResult j = run("--format json enumerate dyck --n 2");
    REQUIRE(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["count"] == 2);
}

TEST_CASE("distribution subcommand") {
    RunResult r = run("distribution gldim --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "{1:1}"));

    RunResult csv = run("--format csv distribution gldim --n 3");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "value,count"));
    CHECK(contains(csv.output, "1,1"));
    CHECK(contains(csv.output, "2,1"));

    RunResult j = run("--format json distribution height --n 3");
    REQUIRE(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["statistic"] == "height");
    CHECK(parsed["total"] == 2);
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify --suite equidistribution --n 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS"));

    RunResult bad = run("verify --suite nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("stdin input") {
    std::string cmd = std::string("echo '[3,4,4,3,2,1]' | ") + CLI_PATH + " analyze - 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(contains(out, "gldim: 3"));

    RunResult empty = run("analyze - < /dev/null");
    CHECK(empty.exit_code == 2);
}
