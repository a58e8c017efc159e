#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(TASEP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[1024];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("prob prints the symbolic numerator and denominator") {
    const auto result = run_cli("prob 10");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "numerator   = a^2*b + a*b^2"));
    CHECK(contains(result.output, "denominator = a^2*b + a^2 + a*b^2 + a*b + b^2"));
}

TEST_CASE("prob evaluates at rational rates") {
    const auto result = run_cli("prob 0 --eval 1/2,1/2");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "Pr = 1/2"));
}

TEST_CASE("prob rejects malformed words with the usage exit code") {
    CHECK(run_cli("prob \"\"").exit_code == 2);
    CHECK(run_cli("prob 012").exit_code == 2);
    CHECK(run_cli("prob").exit_code == 2);
    CHECK(run_cli("prob 10 --eval 2,1").exit_code == 2);
}

TEST_CASE("verify passes on small systems") {
    const auto result = run_cli("verify --n 2 --eval 1,1");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "stationary distribution vs tableaux at (1, 1): PASS"));
    CHECK(contains(result.output, "all checks passed"));
}

TEST_CASE("verify refuses oversized systems") {
    CHECK(run_cli("verify --n 20").exit_code == 2);
}

TEST_CASE("tableaux lists fillings with weights") {
    const auto result = run_cli("tableaux 10 --list");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "2 tableaux"));
    CHECK(contains(result.output, "weight a^2*b"));
    CHECK(contains(result.output, "weight a*b^2"));

    const auto single = run_cli("tableaux 0011");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.output, "1 tableaux, total weight a^2*b^2"));

    const auto trivial = run_cli("tableaux 01");
    CHECK(contains(trivial.output, "1 tableaux, total weight a*b"));
}

TEST_CASE("matrix prints the grid and determinant") {
    const auto one = run_cli("matrix 10");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "[b^-1 + a^-1]"));
    CHECK(contains(one.output, "det = b^-1 + a^-1"));

    const auto two = run_cli("matrix 11");
    CHECK(contains(two.output, "[b^-1, 0]"));
    CHECK(contains(two.output, "[1, b^-1]"));
    CHECK(contains(two.output, "det = b^-2"));

    const auto empty = run_cli("matrix 00");
    CHECK(empty.exit_code == 0);
    CHECK(contains(empty.output, "empty matrix (k = 0)"));
    CHECK(contains(empty.output, "det = 1"));
}

TEST_CASE("zn prints the partition function and compares methods") {
    const auto closed = run_cli("zn 2");
    CHECK(closed.exit_code == 0);
    CHECK(contains(closed.output, "a^2*b + a^2 + a*b^2 + a*b + b^2"));

    const auto both = run_cli("zn 2 --method both");
    CHECK(both.exit_code == 0);
    CHECK(contains(both.output, "equality: PASS"));

    CHECK(run_cli("zn 0").exit_code == 2);
}

TEST_CASE("enumeration guards respond to --unsafe-n") {
    CHECK(run_cli("zn 9 --method enumerate").exit_code == 2);
    CHECK(run_cli("zn 9 --method enumerate --unsafe-n").exit_code == 0);
    CHECK(run_cli("zn 11 --method enumerate --unsafe-n").exit_code == 2);
    CHECK(run_cli("tableaux 101010101").exit_code == 2);
}

TEST_CASE("paths mirrors tableaux through the bijection") {
    const auto result = run_cli("paths 10 --list");
    CHECK(result.exit_code == 0);
    CHECK(contains(result.output, "2 paths"));
    CHECK(contains(result.output, "(0)  pwt b^-1  tableau a^2*b"));
    CHECK(contains(result.output, "(1)  pwt a^-1  tableau a*b^2"));
}

TEST_CASE("json output matches the golden forms") {
    const auto prob = run_cli("prob 10 --format json");
    CHECK(prob.exit_code == 0);
    CHECK(prob.output ==
          "{\"denominator\":[[2,1,\"1\"],[2,0,\"1\"],[1,2,\"1\"],[1,1,\"1\"],[0,2,\"1\"]],"
          "\"k\":1,\"n\":2,\"numerator\":[[2,1,\"1\"],[1,2,\"1\"]],\"shape\":[1],"
          "\"word\":\"10\"}\n");

    const auto tableaux = run_cli("tableaux 01 --format json");
    CHECK(tableaux.output == "{\"count\":1,\"total\":[[1,1,\"1\"]],\"word\":\"01\"}\n");

    const auto zn = run_cli("zn 1 --format json");
    CHECK(zn.output == "{\"derrida\":[[1,0,\"1\"],[0,1,\"1\"]],\"method\":\"derrida\",\"n\":1}\n");

    const auto paths = run_cli("paths 10 --format json --list");
    CHECK(paths.output ==
          "{\"count\":2,\"paths\":[{\"labels\":[0],\"pwt\":[[0,-1,\"1\"]],\"shape\":[1],"
          "\"tableau_weight\":[[2,1,\"1\"]]},{\"labels\":[1],\"pwt\":[[-1,0,\"1\"]],"
          "\"shape\":[1],\"tableau_weight\":[[1,2,\"1\"]]}],\"shape\":[1],"
          "\"total\":[[2,1,\"1\"],[1,2,\"1\"]],\"word\":\"10\"}\n");
}

TEST_CASE("json output is stable across runs") {
    for (const std::string args :
         {"prob 0101 --format json", "matrix 0101 --format json", "zn 3 --format json"}) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}
