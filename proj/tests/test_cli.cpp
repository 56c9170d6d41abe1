#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef GRASSCALC_BIN
#error "GRASSCALC_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = std::string(GRASSCALC_BIN) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

// The examples shown in the README must reproduce bit-exactly.

TEST_CASE("documented example: degree")
{
    RunResult r = run("degree --ctx 4,2 --index \"[3,4]\"");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "G(4,2) Omega[3,4] = s(0), dim = 4\n"
          "degree (closed formula) = 2\n"
          "degree (Pieri oracle)   = 2\n"
          "agree\n");
}

TEST_CASE("documented example: analyze")
{
    RunResult r = run("analyze --source 7,3 --target 8,2 --lambda-max 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "map G(7,3) -> G(8,2), N = 12\n"
          "verdict: forced-zero\n"
          "  - Q = 12600 is not a perfect square\n"
          "  - lambda_2^2 coefficient 7/8 is not a rational square\n"
          "Q = 12600 (not a square)\n"
          "degree ratio = 7/2\n"
          "lambda_2^2 coefficient (H^4) = 7/8 (not a rational square)\n"
          "admissible candidate degrees, |lambda| <= 2:\n"
          "  lambda=-2 degree=14336\n"
          "  lambda=2 degree=14336\n"
          "degree +-1 impossible: it requires (m,l) = (n,k)\n");
}

TEST_CASE("documented example: prop46")
{
    RunResult r = run("prop46 --k 7 --probe 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "k=7: norm equation xi^2 - 7*eta^2 = -6\n"
          "(13,5): xi^2*eta^2 + 2 = 4227, not of the form 3*v^2\n"
          "(29,11): xi^2*eta^2 + 2 = 101763, not of the form 3*v^2\n"
          "(209,79): xi^2*eta^2 + 2 = 272613123, not of the form 3*v^2\n"
          "all 3 candidates fail; next solution (463,175)\n"
          "bound: 2c > 175^2 * 463^2 = 6565050625\n");
}

TEST_CASE("documented example: pell")
{
    RunResult r = run("pell --d 7");
    CHECK(r.code == 0);
    CHECK(r.out == "d=7: fundamental solution y=8, x=3 (y^2 - 7*x^2 = 1)\n");
}

TEST_CASE("documented example: v2norm")
{
    RunResult r = run("v2norm --ctx 6,2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "G(6,2) (v_2,v_2) closed form = 3/14\n"
          "G(6,2) (v_2,v_2) Gram-Schmidt = 3/14\n"
          "agree\n");
}

TEST_CASE("documented example: multiply and giambelli")
{
    CHECK(run("multiply --ctx 4,2 --a 2 --b 1,1").out == "s(2) * s(1,1) = 0\n");
    CHECK(run("multiply --ctx 4,2 --a 2 --b 2").out == "s(2) * s(2) = s(2,2)\n");
    CHECK(run("giambelli --ctx 4,2 --partition 2,1").out ==
          "s(2,1) = cbar_1*cbar_2 - cbar_3\n");
}

TEST_CASE("documented example: norm-orbits")
{
    RunResult r = run("norm-orbits --d 3 --target -2 --count 6");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Z[sqrt(3)], norm -2: fundamental unit 2+sqrt(3)\n"
          "orbit generators: 1+sqrt(3)\n"
          "first 6 solutions with xi,eta > 1: (5,3) (19,11) (71,41) (265,153) (989,571) "
          "(3691,2131)\n");
}

TEST_CASE("table and JSON carry the same data")
{
    RunResult table = run("degree --ctx 6,2 --index \"[5,6]\"");
    RunResult js = run("degree --ctx 6,2 --index \"[5,6]\" --format json");
    CHECK(table.code == 0);
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["degree_formula"] == "14");
    CHECK(j["degree_pieri"] == "14");
    CHECK(j["agree"] == true);
    CHECK(j["partition"] == "0");
    CHECK(table.out.find("= 14") != std::string::npos);

    auto pairing = nlohmann::json::parse(run("pairing --ctx 4,2 --grade 2 --format json").out);
    CHECK(pairing["entries"][0][0]["num"] == "1");
    CHECK(pairing["entries"][0][1]["num"] == "0");
    CHECK(pairing["cohomology_degree"] == 4);
}

TEST_CASE("matches lists dimension-matched pairs")
{
    RunResult table = run("matches --k 3 --l 2 --n-max 8");
    CHECK(table.out ==
          "dimension matches k=3 l=2 n<=8:\n"
          "n=7 m=8 N=12\n");
    auto j = nlohmann::json::parse(run("matches --k 3 --l 2 --n-max 8 --format json").out);
    CHECK(j["pairs"].size() == 1);
    CHECK(j["pairs"][0]["n"] == 7);
    CHECK(j["pairs"][0]["m"] == 8);
    CHECK(j["pairs"][0]["N"] == 12);
}

TEST_CASE("analyze JSON fields")
{
    auto j = nlohmann::json::parse(
        run("analyze --source 7,3 --target 8,2 --format json").out);
    CHECK(j["verdict"] == "forced-zero");
    CHECK(j["Q"]["value"] == "12600");
    CHECK(j["Q"]["is_square"] == false);
    CHECK(j["degree_ratio"]["num"] == "7");
    CHECK(j["degree_ratio"]["den"] == "2");
    CHECK(j["lambda_squares"][0]["j"] == 2);
    CHECK(j["lambda_squares"][0]["value"]["num"] == "7");
    CHECK(j["lambda_squares"][0]["value"]["den"] == "8");
    CHECK(j["N"] == 12);
    CHECK(j["lambda_max"] == 16);
    CHECK(j["candidate_degrees"].size() == 33);
}

TEST_CASE("quaternionic flag doubles displayed degrees only")
{
    auto c = nlohmann::json::parse(run("analyze --source 7,3 --target 8,2 --format json").out);
    auto h = nlohmann::json::parse(
        run("analyze --source 7,3 --target 8,2 --field H --format json").out);
    CHECK(h["verdict"] == c["verdict"]);
    CHECK(h["Q"] == c["Q"]);
    CHECK(h["degree_ratio"] == c["degree_ratio"]);
    CHECK(h["candidate_degrees"] == c["candidate_degrees"]);
    CHECK(h["lambda_squares"][0]["value"] == c["lambda_squares"][0]["value"]);
    CHECK(h["lambda_squares"][0]["cohomology_degree"] == 8);
    CHECK(c["lambda_squares"][0]["cohomology_degree"] == 4);
    CHECK(h["field"] == "H");

    RunResult ring_h = run("ring --ctx 4,2 --grade 2 --field H");
    CHECK(ring_h.out.find("H^8") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("--help").code == 0);
    CHECK(run("degree --ctx 4,2 --index \"[3,4]\"").code == 0);
    // usage errors
    CHECK(run("nonsense", true).code == 2);
    CHECK(run("degree --ctx 4,2", true).code == 2); // neither index nor partition
    CHECK(run("degree --ctx 4,2 --partition \"1,2\"", true).code == 2); // not a partition
    CHECK(run("degree --ctx whoops --partition 1", true).code == 2);
    CHECK(run("analyze --source 7,3", true).code == 2); // missing required flag
    // domain errors from the library
    CHECK(run("degree --ctx 4,2 --index \"[2,5]\"", true).code == 1); // i_k > n
    CHECK(run("degree --ctx 4,2 --partition \"3\"", true).code == 1); // outside the box
    CHECK(run("pairing --ctx 4,2 --grade 3", true).code == 1);        // 2r > N
    CHECK(run("pell --d 4", true).code == 1);
    CHECK(run("analyze --source 7,3 --target 9,2", true).code == 1); // dim mismatch
    CHECK(run("ring --ctx 4,3", true).code == 1);                    // k > n/2
}

TEST_CASE("scan honors jobs deterministically")
{
    RunResult one = run("scan-q --a 2 --b 3 --xmax 2000");
    RunResult four = run("scan-q --a 2 --b 3 --xmax 2000 --jobs 4");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.find("x=2 z=3 y=24") != std::string::npos);
}
