#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

// Drives the installed binary end to end; CLAUSEN_CLI_PATH is injected by the
// build so the test always runs the binary it was built with.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLAUSEN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("eval prints exact values") {
    auto r = run("eval --num -1,1,1 --den -2,1 --z 1 --truncate 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3/2\n");

    r = run("eval --num -2,1 --den 1 --z 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run("eval --num -1,2,3 --den 4,5 --z 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7/10\n");
}

TEST_CASE("eval rejects bad input with the documented codes") {
    // non-terminating without --float
    CHECK(run("eval --num 1/2,1/2 --den 3/2 --z 1").exit_code == 2);
    // parse error
    CHECK(run("eval --num 1//2 --den 1 --z 1").exit_code == 2);
    // in-range denominator pole is an evaluation error
    CHECK(run("eval --num 1,1 --den -2 --z 1 --truncate 5").exit_code == 3);
}

TEST_CASE("verify reports verdicts and exit codes") {
    auto r = run("verify --id watson.trunc-m --m 1 --alpha 1 --beta 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "lhs = 4/3"));
    CHECK(contains(r.out, "rhs = 4/3"));
    CHECK(contains(r.out, "verdict: equal"));

    r = run("verify --id whipple.trunc-m --m 1 --k 1 --alpha 1/2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "25/24"));

    // forced side-condition rejection names the condition
    CHECK(run("verify --id saalschutz.trunc --m 1 --k 1 --alpha -2 --beta 1").exit_code == 2);

    // unknown id
    CHECK(run("verify --id watson.unknown --m 1").exit_code == 2);

    // an impossible tolerance turns a float verification into a mismatch
    CHECK(run("verify --id watson.nt --alpha 1/2 --beta 1/2 --gamma 1/2 --tol 0").exit_code == 1);

    // JSON mode carries the same verdict
    r = run("verify --id dixon.trunc-b --m 1 --k 1 --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"lhs\": \"10/9\""));
    CHECK(contains(r.out, "\"verdict\": \"equal\""));
}

TEST_CASE("mellin checks cases and the generic transform") {
    auto r = run("mellin --case IV --m 1 --k 1 --alpha 1 --beta 1 --mu 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "coefficient = 9/8"));
    CHECK(contains(r.out, "value = 1.125"));

    r = run("mellin --case III --m 1 --k 1 --beta 2/3 --mu 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "coefficient = 0"));

    r = run("mellin --case I --m 1 --alpha 1 --beta 1 --mu 1 --quad");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "coefficient = 4/3"));
    CHECK(contains(r.out, "quadrature"));

    r = run("mellin --case generic --m 1 --l 1 --a 1 --b 3/2 --s 1 --mu 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "coefficient = 4/3"));

    CHECK(run("mellin --case XVII --m 1").exit_code == 2);
    // m = 0 fails the linked theorem's validation
    CHECK(run("mellin --case I --m 0 --alpha 1 --beta 1").exit_code == 2);
}

TEST_CASE("list prints the catalog and the case table") {
    const auto r = run("list");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "theorems (34):"));
    CHECK(contains(r.out, "mellin cases (16):"));
    CHECK(contains(r.out, "watson.trunc-m"));
    CHECK(contains(r.out, "[2.8c ]"));
    CHECK(contains(r.out, "dixon.term-m"));
    CHECK(contains(r.out, "XVI"));

    const auto j = run("list --json");
    CHECK(j.exit_code == 0);
    CHECK(contains(j.out, "\"id\": \"saalschutz.trunc-b\""));
    CHECK(contains(j.out, "\"case\": \"XIII\""));
}

TEST_CASE("sweep emits a clean deterministic report") {
    const std::string args = "sweep --theorems dixon.trunc-b,watson.term-even --trials 4 --seed 11";
    const auto a = run(args);
    CHECK(a.exit_code == 0);
    CHECK(contains(a.out, "\"schema\": \"clausen-sweep-report/1\""));
    CHECK(contains(a.out, "\"mismatch\": 0"));
    CHECK(contains(a.out, "\"records\": 8"));
    CHECK(run(args).out == a.out);
}
