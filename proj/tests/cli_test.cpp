// Integration tests for the command-line front end; drives the installed
// binary through the exit-code contract. The binary path arrives via the
// QKERNEL_CLI environment variable set by CTest.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("QKERNEL_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "cli_test_stdout.tmp";
    std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("eval subcommand") {
    auto r = run("eval qpoch a=0 q=0.5 n=5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 1) == "1");

    r = run("eval theta x=0.25 q=0.5");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.out)) < 1e-12);

    r = run("eval aw n=0 x=0.3 a=0.1 b=0.2 c=0.3 d=0.4 q=0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 1) == "1");

    r = run("eval phi numer=0.3,0.4 denom=0.2 q=0.5 z=0.25");
    CHECK(r.exit_code == 0);

    r = run("eval wphi b=0.3 tail=0.2,0.4 q=0.5 z=0.1");
    CHECK(r.exit_code == 0);

    r = run("eval cdqh n=1 x=0.2 a=0.3 b=0.2 c=0.1 q=0.5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("eval error contract") {
    // missing argument: usage error
    auto r = run("eval qpoch a=0.3");
    CHECK(r.exit_code == 1);
    // malformed literal is a usage error as well
    r = run("eval qpoch a=zebra q=0.5 n=2");
    CHECK(r.exit_code == 1);
    // evaluator error with the error name on stderr
    r = run("eval theta x=0 q=0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("DomainError") != std::string::npos);
    // unknown subcommand arguments: CLI usage error
    r = run("eval");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify exit codes and report") {
    auto r = run("verify --cases nosuchcase --seed 1 --samples 2 --out cli_test_r0.json");
    CHECK(r.exit_code == 1);

    r = run("verify --cases AWint --seed 42 --samples 3 --out cli_test_r1.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("AWint: PASS 3/3") != std::string::npos);
    std::string rep = slurp("cli_test_r1.json");
    CHECK(rep.find("\"case\": \"AWint\"") != std::string::npos);

    // an unreachable tolerance forces exit 3 but still writes the report
    r = run("verify --cases AWgf2 --seed 1 --samples 2 --tol 1e-300 --out cli_test_r2.json");
    CHECK(r.exit_code == 3);
    CHECK(slurp("cli_test_r2.json").find("\"pass\": false") != std::string::npos);

    // csv format
    r = run("verify --cases AWgf2 --seed 1 --samples 2 --format csv --out cli_test_r3.csv");
    CHECK(r.exit_code == 0);
    CHECK(slurp("cli_test_r3.csv").find("case,index") != std::string::npos);

    std::remove("cli_test_r0.json");
    std::remove("cli_test_r2.json");
    std::remove("cli_test_r3.csv");
}

TEST_CASE("report subcommand") {
    auto r = run("verify --cases nonstan --seed 4 --samples 2 --out cli_test_r4.json");
    REQUIRE(r.exit_code == 0);
    r = run("report --in cli_test_r4.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("nonstan") != std::string::npos);
    r = run("report --in cli_test_r4.json --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("case,samples") != std::string::npos);
    r = run("report --in does_not_exist.json");
    CHECK(r.exit_code == 1);
    std::ofstream bad("cli_test_bad.json");
    bad << "{ not json";
    bad.close();
    r = run("report --in cli_test_bad.json");
    CHECK(r.exit_code == 1);
    std::remove("cli_test_bad.json");
    std::remove("cli_test_r4.json");
}

TEST_CASE("verify reports are byte-identical across runs") {
    auto r1 = run("verify --cases AWint,H-qint --seed 8 --samples 2 --out cli_test_d1.json");
    auto r2 = run("verify --cases AWint,H-qint --seed 8 --samples 2 --out cli_test_d2.json");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp("cli_test_d1.json") == slurp("cli_test_d2.json"));
    std::remove("cli_test_d1.json");
    std::remove("cli_test_d2.json");
    std::remove("cli_test_r1.json");
}
