#include <doctest.h>

#include "coprime/report.hpp"

using namespace coprime;

TEST_CASE("decimal strings for wide integers") {
    CHECK(to_string(int128(0)) == "0");
    CHECK(to_string(int128(-3)) == "-3");
    int128 big = 1;
    for (int i = 0; i < 38; ++i) big *= 10; // 10^38, far past 64 bits
    CHECK(to_string(big) == "1" + std::string(38, '0'));
    CHECK(to_string(-big + 1) == "-" + std::string(38, '9'));
}

TEST_CASE("17-digit float format") {
    CHECK(format_double17(1.0) == "1");
    CHECK(format_double17(0.5) == "0.5");
    CHECK(format_double17(0.1) == "0.10000000000000001"); // shows all 17 digits
    CHECK(format_double17(0.0) == "0");
}

TEST_CASE("fixed-schema rendering") {
    const auto k3 = compute_polynomial(complete_graph(3), true);
    CHECK(render_poly_json(k3) ==
          R"({"signed":true,"coefficients":["1","0","-3","2"]})");

    DensityEstimate est;
    est.value = 1.0;
    est.prime_bound = 100;
    est.tail_bound = 0.0;
    est.float_budget = 0.5;
    CHECK(render_density_json(est) ==
          R"({"value":1,"prime_bound":100,"tail_bound":0,"float_budget":0.5})");

    CountResult r;
    r.x = 10;
    r.count = 63;
    r.method = CountMethod::bruteforce;
    CHECK(render_count_json(r) == R"({"count":"63","method":"bruteforce"})");
    CHECK(render_count_both_json(r, true) ==
          R"({"count":"63","method":"both","methods_agree":true})");

    CHECK(render_f_json(9, "both", true) == R"({"value":"9","path":"both","agree":true})");
    CHECK(render_f_json(-1, "multiplicative", true) ==
          R"({"value":"-1","path":"multiplicative"})");
}

TEST_CASE("table rendering") {
    ErrorDiagnostic d;
    d.x = 10;
    d.count = 63;
    d.main_term = 60.79271018540267;
    d.abs_error = 2.2072898145973295;
    d.ratio = 0.09586;
    const std::string tsv = render_table_tsv({d});
    CHECK(tsv.substr(0, 36) == "x\tg\tmain_term\tabs_error\tratio\n10\t63\t");
    CHECK(tsv.back() == '\n');
    const std::string json = render_table_json({d});
    CHECK(json.front() == '[');
    CHECK(json.find("\"x\":10,\"g\":\"63\"") != std::string::npos);
}

TEST_CASE("verify report rendering") {
    std::vector<SuiteResult> suites(2);
    suites[0] = {"alpha", 10, 0, ""};
    suites[1] = {"beta", 5, 2, "case 3: 1 != 2"};
    CHECK(render_verify_json(suites) ==
          R"({"suites":[{"name":"alpha","cases":10,"failures":0,"pass":true,"note":""},)"
          R"({"name":"beta","cases":5,"failures":2,"pass":false,"note":"case 3: 1 != 2"}],"pass":false})");
}
