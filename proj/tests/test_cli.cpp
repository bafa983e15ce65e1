#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ccw/report.hpp"

using namespace ccw;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CCW_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("cosets subcommand lists the example partition") {
    RunResult res = run_cli("cosets --p 5 --e 1 --n 18 --lambda 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("members=3,15") != std::string::npos);
    CHECK(res.output.find("members=9") != std::string::npos);
    CHECK(res.output.find("members=1,5,13,17,25,29") != std::string::npos);

    RunResult res2 = run_cli("cosets --p 3 --n 65 --lambda 2");
    CHECK(res2.output.find("members=65") != std::string::npos);
    CHECK(res2.output.find("members=5,15,45") != std::string::npos);

    RunResult res3 = run_cli("cosets --p 7 --n 1 --lambda 1");
    CHECK(res3.exit_code == 0);
    CHECK(res3.output.find("alpha=0") != std::string::npos);
}

TEST_CASE("analyze produces the example values and exit code 0") {
    RunResult res = run_cli("analyze --p 5 --n 18 --lambda 4 --cosets 3 --weights --oracle");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("n_rho=2") != std::string::npos);
    CHECK(res.output.find("12x^12") != std::string::npos);
    CHECK(res.output.find("12x^18") != std::string::npos);

    RunResult res3 = run_cli("analyze --p 7 --n 32 --lambda 2 --cosets 10 --weights");
    CHECK(res3.exit_code == 0);
    CHECK(res3.output.find("n_rho_m=1") != std::string::npos);

    RunResult res2 = run_cli("analyze --p 3 --n 65 --lambda 2 --cosets 65,5 --weights --oracle");
    CHECK(res2.exit_code == 0);
    CHECK(res2.output.find("n_rho=4") != std::string::npos);
    CHECK(res2.output.find("oracle: rho=4") != std::string::npos);
}

TEST_CASE("validation failures exit 2 with a single-line reason") {
    RunResult res = run_cli("analyze --p 5 --n 10 --lambda 2 --cosets 1");
    CHECK(res.exit_code == 2);
    CHECK(res.output.rfind("error: validation:", 0) == 0);
    CHECK(res.output.find('\n') == res.output.size() - 1);

    CHECK(run_cli("analyze --p 4 --n 3 --lambda 1 --cosets 1").exit_code == 2);
    CHECK(run_cli("analyze --p 5 --n 18 --lambda 0 --cosets 1").exit_code == 2);
    CHECK(run_cli("analyze --p 5 --n 18 --lambda 4 --cosets 2").exit_code == 2);
    CHECK(run_cli("cosets --p 5 --n 18 --lambda g^").exit_code == 2);
}

TEST_CASE("resource caps exit 3") {
    RunResult res = run_cli("analyze --p 3 --n 65 --lambda 2 --cosets 1 --weights --enum-cap 1024");
    CHECK(res.exit_code == 3);
    CHECK(res.output.rfind("error: resource:", 0) == 0);

    // splitting field beyond the table cap: q = 3, n = 29 needs 3^28
    CHECK(run_cli("analyze --p 3 --n 29 --lambda 1 --cosets 29").exit_code == 3);
}

TEST_CASE("reproduce passes and the tamper hook fails") {
    RunResult ok = run_cli("reproduce");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("4/4 PASS") != std::string::npos);

    RunResult bad = run_cli("reproduce --self-test-tamper");
    CHECK(bad.exit_code == 4);
    CHECK(bad.output.find("FAIL") != std::string::npos);
    CHECK(bad.output.find("expected") != std::string::npos);
}

TEST_CASE("search finds the tight example codes") {
    RunResult res = run_cli("search --p 5 --n 18 --lambda 4 --max-size 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("3 k=2 n_rho=2 n_rho_m=2 weights=2 TIGHT") != std::string::npos);

    RunResult res2 =
        run_cli("search --p 3 --n 65 --lambda 2 --max-size 2 --enum-cap 524288 --max-subsets 200");
    CHECK(res2.exit_code == 0);
    CHECK(res2.output.find("5+65") != std::string::npos);
    CHECK(res2.output.find("TIGHT") != std::string::npos);
}

TEST_CASE("json report round trip is deterministic") {
    AnalysisRequest req;
    req.p = 5;
    req.e = 1;
    req.n = 18;
    req.lambda = "4";
    req.cosets = {3};
    req.with_weights = true;
    req.with_oracle = true;
    Json doc1 = run_analysis(req);
    Json doc2 = run_analysis(request_from_json(doc1["request"]));
    doc1.erase("timing_ms");
    doc2.erase("timing_ms");
    CHECK(doc1.dump() == doc2.dump());

    CHECK(doc1["schema"] == 1);
    for (const char* key : {"request", "context", "cosets", "code", "bounds", "weights",
                            "tightness", "oracle", "delsarte"})
        CHECK(doc1.contains(key));
}

TEST_CASE("json and csv files are written and parse back") {
    std::string dir = "/tmp/ccw_cli_test";
    std::string json_path = dir + "_report.json";
    std::string csv_path = dir + "_weights.csv";
    RunResult res = run_cli("analyze --p 5 --n 18 --lambda 4 --cosets 3 --weights --json " +
                            json_path + " --csv " + csv_path);
    CHECK(res.exit_code == 0);

    std::ifstream jf(json_path);
    REQUIRE(jf.good());
    Json doc = Json::parse(jf);
    CHECK(doc["schema"] == 1);
    CHECK(doc["bounds"]["n_rho"] == 2);
    CHECK(doc["context"]["tn"] == 36);

    std::ifstream cf(csv_path);
    REQUIRE(cf.good());
    std::stringstream ss;
    ss << cf.rdbuf();
    CHECK(ss.str() == "weight,count\n0,1\n12,12\n18,12\n");
    std::remove(json_path.c_str());
    std::remove(csv_path.c_str());
}

TEST_CASE("search with excluding caps emits an empty stream and exit 0") {
    RunResult res = run_cli("search --p 3 --n 65 --lambda 2 --max-size 1 --enum-cap 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("0 subsets analyzed, 0 tight") != std::string::npos);
}

TEST_CASE("csv outputs") {
    WeightDistribution dist;
    dist.counts = {1, 0, 0, 4};
    CHECK(weights_csv(dist) == "weight,count\n0,1\n3,4\n");

    SearchOptions opt;
    opt.max_components = 1;
    auto records = run_search(5, 1, 18, "4", opt);
    std::string csv = search_csv(records);
    CHECK(csv.find("cosets,k,n_rho,n_rho_m,distinct_weights,tight_rho,tight_rho_m\n") == 0);
    CHECK(csv.find("3,2,2,2,2,1,1") != std::string::npos);
}
