#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "urd/format.hpp"
#include "urd/verifier.hpp"

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
}

const char* cli_path() { return URD_CLI_PATH; }  // baked in by the build

// Runs `urd <args>` through the shell with stdin/stdout/stderr redirected.
CmdResult run(const std::string& args, const std::string& stdin_data = "") {
    spit("cli_stdin.tmp", stdin_data);
    const std::string cmd = std::string("'") + cli_path() + "' " + args +
                            " <cli_stdin.tmp >cli_stdout.tmp 2>cli_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    CmdResult res;
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp("cli_stdout.tmp");
    res.err = slurp("cli_stderr.tmp");
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spectrum: output format and failure modes") {
    CmdResult res = run("spectrum 12");
    CHECK(res.status == 0);
    CHECK(res.out == "3 3\n6 1\n");

    res = run("spectrum 9");
    CHECK(res.status == 0);
    CHECK(res.out == "0 4\n3 2\n6 0\n");

    CHECK(run("spectrum 10").status == 3);
    CHECK(run("spectrum").status == 64);
    CHECK(run("spectrum abc").status == 64);
    CHECK(run("bogus").status == 64);
    CHECK(run("").status == 64);
    CHECK(run("--help").status == 0);
}

TEST_CASE("build writes a verifying file; verify accepts it") {
    CmdResult res = run("build 9 3 2 --out cli_d9.urd");
    REQUIRE(res.status == 0);
    const urd::Decomposition d = urd::parse_decomposition(slurp("cli_d9.urd"));
    CHECK(urd::verify_request(d, 9, 3, 2).accepted());

    res = run("verify cli_d9.urd");
    CHECK(res.status == 0);
    CHECK(res.out == "ACCEPT\n");

    res = run("verify cli_d9.urd --expect-v 9 --expect-r 3 --expect-s 2");
    CHECK(res.status == 0);

    res = run("verify cli_d9.urd --expect-v 9 --expect-r 0 --expect-s 4");
    CHECK(res.status == 1);
    CHECK(contains(res.out, "HeaderMismatch"));

    CHECK(run("verify cli_d9.urd --expect-v 9").status == 64);  // all or none
}

TEST_CASE("build: stdout, stdin pipes and determinism per seed") {
    CmdResult a = run("build 15 3 5 --seed 7 --out -");
    CmdResult b = run("build 15 3 5 --seed 7");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);

    CmdResult piped = run("verify -", a.out);
    CHECK(piped.status == 0);
    CHECK(piped.out == "ACCEPT\n");
}

TEST_CASE("build failure modes: infeasible, usage, timeout") {
    CmdResult res = run("build 6 0 2");
    CHECK(res.status == 3);
    CHECK(contains(res.err, "KnownNonexistent"));

    CHECK(run("build 9 1 3").status == 3);
    CHECK(run("build 10 0 0").status == 3);
    CHECK(run("build 9 3").status == 64);

    res = run("build 33 3 14 --time-limit-secs 0.000000001");
    CHECK(res.status == 4);
    CHECK(contains(res.err, "time limit"));
}

TEST_CASE("verify failure modes: reject, parse error, missing file") {
    CmdResult res = run("verify -", "urd-text v1\nv=3 graph=complete r=0 s=0\n");
    CHECK(res.status == 1);
    CHECK(contains(res.out, "EdgeMissing"));

    res = run("verify -", "garbage\n");
    CHECK(res.status == 2);
    CHECK(contains(res.err, "parse error at 1:1"));

    CHECK(run("verify cli_no_such_file.urd").status == 2);
}

TEST_CASE("transform replaces two triangle classes by three path classes") {
    REQUIRE(run("build 9 0 4 --out cli_t9.urd").status == 0);

    CmdResult res = run("transform cli_t9.urd 0 1 --out cli_t9_out.urd");
    REQUIRE(res.status == 0);
    res = run("verify cli_t9_out.urd --expect-v 9 --expect-r 3 --expect-s 2");
    CHECK(res.status == 0);

    // Index misuse and path-class inputs.
    CHECK(run("transform cli_t9.urd 0 0").status == 3);
    CHECK(run("transform cli_t9.urd 0 4").status == 3);

    REQUIRE(run("build 9 3 2 --out cli_m9.urd").status == 0);
    res = run("transform cli_m9.urd 0 1");  // classes 0..2 are paths
    CHECK(res.status == 3);
    res = run("transform cli_m9.urd 3 4 --out cli_m9_out.urd");
    CHECK(res.status == 0);
    CHECK(run("verify cli_m9_out.urd --expect-v 9 --expect-r 6 --expect-s 0").status == 0);

    // Rejected input never reaches the transform.
    res = run("transform - 0 1", "urd-text v1\nv=3 graph=complete r=0 s=0\n");
    CHECK(res.status == 1);
    CHECK(contains(res.err, "EdgeMissing"));
}

TEST_CASE("oracle spectrum: tiny orders, gating, budget exhaustion") {
    CmdResult res = run("oracle spectrum 3");
    CHECK(res.status == 0);
    CHECK(res.out == "0 1\nexhausted: yes\n");

    res = run("oracle spectrum 6");
    CHECK(res.status == 0);
    CHECK(res.out == "3 0\nexhausted: yes\n");

    res = run("oracle spectrum 12");
    CHECK(res.status == 3);
    CHECK(contains(res.err, "--long-run"));

    // v=9 finishes before the deadline is ever consulted; v=12 cannot.
    res = run("oracle spectrum 12 --long-run --time-limit-secs 0.000000001");
    CHECK(res.status == 4);
    CHECK(contains(res.out, "exhausted: no"));
}
