#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PODQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("expand emits the pod2 head as JSON") {
    RunResult r = run_cli("expand --target pod2 --order 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("coeffs":["1","2","3","6","11"])"));
    CHECK(contains(r.output, R"("modulus":null)"));
}

TEST_CASE("expand a product spec to CSV: partition numbers") {
    RunResult r = run_cli("expand --product '(q;q)^-1' --order 6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "n,coeff\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n"));
}

TEST_CASE("expand with a modulus") {
    RunResult r = run_cli("expand --target pod2 --order 10 --mod 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\n4,2\n"));   // pod2(4) = 11
    CHECK(contains(r.output, "\n10,2\n"));  // pod2(10) = 152
    CHECK(contains(run_cli("expand --target pod2 --order 6 --mod 3").output,
                   R"("modulus":3)"));
}

TEST_CASE("expand rejects bad input") {
    CHECK(run_cli("expand --target nope --order 4").exit_code == 2);
    CHECK(run_cli("expand --target pod2").exit_code == 2);  // --order required
    RunResult r = run_cli("expand --product '(q;q' --order 4");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "error:"));
    CHECK(contains(r.output, "product spec"));
}

TEST_CASE("verify a single identity") {
    RunResult r = run_cli("verify --identity thm2.1a --order 50");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("check":"thm2.1a")"));
    CHECK(contains(r.output, R"("pass":true)"));
    CHECK(r.output.find("thm2.1b") == std::string::npos);  // group filtered
}

TEST_CASE("verify runs the whole suite in declaration order") {
    RunResult r = run_cli("verify --suite all --order 60");
    CHECK(r.exit_code == 0);
    const char* names[] = {"lemma2.1a", "lemma2.1b", "psi2split", "lemma3.1a", "lemma3.1b",
                           "psi5pow",   "psi5split", "psiprod",   "jtp",       "thm2.1a",
                           "thm2.1b",   "cor2.2a",   "cor2.2b",   "t2bridge",  "cong3n1",
                           "descent3",  "descent5",  "thm3.1-structural", "thm5.1a",
                           "thm5.1b",   "thm5.1c",   "rankodd",   "rankgf",    "entry8i",
                           "lemma4.1"};
    size_t pos = 0;
    for (const char* name : names) {
        size_t found = r.output.find(std::string("\"check\":\"") + name + "\"", pos);
        CAPTURE(name);
        REQUIRE(found != std::string::npos);
        pos = found;
    }
    CHECK(r.output.find("\"pass\":false") == std::string::npos);
}

TEST_CASE("verify rejects unknown identities and tiny orders") {
    RunResult r = run_cli("verify --identity nonsense --order 50");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "unknown identity"));
    CHECK(run_cli("verify --order 20").exit_code == 2);
    CHECK(run_cli("verify --suite extra --order 50").exit_code == 2);
}

TEST_CASE("scan a congruence family to CSV") {
    RunResult r = run_cli("scan --family thm3.1 --alpha-max 1 --order 600 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "check,order,pass,n,expected,actual,ms\n"));
    CHECK(contains(r.output, "thm3.1[alpha=0],600,true"));
    CHECK(contains(r.output, "thm3.1[alpha=1],600,true"));
}

TEST_CASE("scan with alpha-max 0 reduces to the elementary congruence") {
    RunResult r = run_cli("scan --family thm3.1 --alpha-max 0 --order 50");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("check":"thm3.1[alpha=0]")"));
    CHECK(contains(r.output, R"("pass":true)"));
}

TEST_CASE("scan rejects unknown families and short orders") {
    RunResult bad = run_cli("scan --family bogus --order 600");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "unknown family"));
    RunResult small = run_cli("scan --family thm3.2a --alpha-max 2 --order 100");
    CHECK(small.exit_code == 2);
    CHECK(contains(small.output, "raise --order"));
}

TEST_CASE("oracle emits the golden CSV table") {
    RunResult r = run_cli("oracle --n 2 --stat b --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "stat,m,n,count\n"
          "b,0,0,1\n"
          "b,-1,1,1\n"
          "b,1,1,1\n"
          "b,-1,2,1\n"
          "b,0,2,1\n"
          "b,1,2,1\n");
    CHECK(run_cli("oracle --n 3 --stat x").exit_code == 2);
}

TEST_CASE("equidistribution subcommand") {
    RunResult r = run_cli("equidist --stat b --max-weight 11");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, R"("check":"equidist-b")"));
    CHECK(contains(r.output, R"("pass":true)"));
    CHECK(run_cli("equidist --stat d --max-weight 11").exit_code == 2);
}

TEST_CASE("usage basics") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(contains(run_cli("--help").output, "expand"));
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("output is deterministic across runs") {
    RunResult a1 = run_cli("expand --target A --order 200");
    RunResult a2 = run_cli("expand --target A --order 200");
    CHECK(a1.exit_code == 0);
    CHECK(a1.output == a2.output);
    RunResult o1 = run_cli("oracle --n 8 --stat c");
    RunResult o2 = run_cli("oracle --n 8 --stat c");
    CHECK(o1.output == o2.output);
}
