// Drives the installed binary end to end: exit codes, report formats, and
// byte-identical reruns for seeded configs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef VDGAP_CLI_PATH
#error "VDGAP_CLI_PATH must point at the vdgap binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/vdgap_cli_test_out.txt";
    std::string cmd = std::string(VDGAP_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    int code = -1;
    if (status != -1) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("k-table emits the frozen value") {
    auto r = run_cli("k-table --m 3 --s 3/2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"value\": \"1/2\"") != std::string::npos);
    CHECK(r.stdout_text.find("\"argmax\": \"1\"") != std::string::npos);
}

TEST_CASE("example1 reports the worked family") {
    auto r = run_cli("example1 --t 1 --d 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"R\": \"50\"") != std::string::npos);
    CHECK(r.stdout_text.find("(1,7), (5,5), (-1,7)") != std::string::npos);
}

TEST_CASE("identical seeded configs produce identical bytes") {
    const std::string cmd = "verify-identity --ring quadratic --d 2 --m 4 --trials 5 --seed 42 --format json";
    auto first = run_cli(cmd);
    auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.stdout_text == second.stdout_text);
    CHECK(!first.stdout_text.empty());

    auto scan1 = run_cli("conic-scan --d 1 --r-max 50 --m 3 --format json");
    auto scan2 = run_cli("conic-scan --d 1 --r-max 50 --m 3 --format json");
    CHECK(scan1.exit_code == 0);
    CHECK(scan1.stdout_text == scan2.stdout_text);
    CHECK(scan1.stdout_text.find("\"points\": \"12\"") != std::string::npos);  // R = 50
}

TEST_CASE("exit codes reflect report contents") {
    // A failed check (premise failure) exits 1: s = 1 cannot hold for three
    // distinct divisors of gamma.
    auto failing = run_cli("prop1 --ring integer --m 3 --trials 1 --seed 7 --s 1 --format json");
    CHECK(failing.exit_code == 1);
    CHECK(failing.stdout_text.find("\"pass\": false") != std::string::npos);

    // Config errors exit 2.
    CHECK(run_cli("k-table --m 1 --s 1/2").exit_code == 2);            // m < 2
    CHECK(run_cli("k-table --m 3 --s 7/2").exit_code == 2);            // s > m
    CHECK(run_cli("verify-identity --m 3 --trials 1").exit_code != 0); // missing --seed
    CHECK(run_cli("divisor-gaps --n 105 --q 4 --a 2 --s 1/3").exit_code == 2);  // gcd != 1
    CHECK(run_cli("overlap --a 1,2 --k 0 --weights 1").exit_code == 2);  // mode clash
}

TEST_CASE("divisor-gaps matches the worked instance end to end") {
    auto r = run_cli("divisor-gaps --n 105 --q 4 --a 1 --s 1/3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"min_gap\": \"16\"") != std::string::npos);
    CHECK(r.stdout_text.find("\"m\": \"3\"") != std::string::npos);
}

TEST_CASE("poly-gaps accepts coefficient lists") {
    auto r = run_cli("poly-gaps --p -1,0,0,1 --p 1,0,0,1 --r-poly -1,0,0,0,0,0,1 --s 1/2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"ordering\": \"equal\"") != std::string::npos);
}

TEST_CASE("overlap modes") {
    CHECK(run_cli("overlap --a 3,1,2 --k 1").exit_code == 0);
    CHECK(run_cli("overlap --weights 1/4,1/4,1/4,1/4 --set 0,1 --set 0,2 --set 0,3 "
                  "--set 1,2 --set 1,3 --set 2,3").exit_code == 0);
}

TEST_CASE("cor5 tight witness") {
    auto r = run_cli("cor5 --c 6 --a 2,3,6 --k 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("gcd-overlap-m3-k1,true,divisible") != std::string::npos);
    CHECK(run_cli("cor5 --c 12 --a 4,6 --k 1 --s 1/2").exit_code == 0);
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "/tmp/vdgap_report_test.json";
    auto r = run_cli("k-table --m 5 --s 5/2 --out " + path + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"command\": \"k-table\"") != std::string::npos);
    std::remove(path.c_str());
}
