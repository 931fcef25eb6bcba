#include "doctest.h"
#include "m3p/json_io.hpp"
#include "m3p/verify.hpp"

using namespace m3p;

TEST_CASE("series serialisation") {
    QSeries s(5);
    s.set_coeff(1, 3);
    s.set_coeff(4, Int("123456789012345678901234567890"));
    OrderedJson j = series_json(s);
    CHECK(j["trunc"] == 5);
    REQUIRE(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][0][0] == 1);
    CHECK(j["coeffs"][0][1] == "3");
    CHECK(j["coeffs"][1][1] == "123456789012345678901234567890");

    CHECK(series_json(gauss_binomial(1, 1))["trunc"].is_null());

    QZSeries z(4);
    z.add_term(2, -1, 7);
    OrderedJson jz = series_json(z);
    REQUIRE(jz["coeffs"].size() == 1);
    CHECK(jz["coeffs"][0][0] == 2);
    CHECK(jz["coeffs"][0][1] == -1);
    CHECK(jz["coeffs"][0][2] == "7");
}

TEST_CASE("rational strings") {
    CHECK(rat_string(make_rat(-3, 6)) == "-1/2");
    CHECK(rat_string(Rat(4)) == "4");
}

TEST_CASE("reports are deterministic") {
    VerifySizes sizes;
    sizes.ps = {4};
    sizes.order = 10;
    sizes.nmax = 3;
    sizes.Nmax = 4;
    RunReport a = run_verify("recursion", sizes);
    RunReport b = run_verify("recursion", sizes);
    CHECK(report_json(a).dump() == report_json(b).dump());
    CHECK(a.overall());

    // timings are opt-in so that the default payload is byte-stable
    OrderedJson with_times = report_json(a, true);
    CHECK(with_times["checks"][0].contains("wall_ms"));
    CHECK(!report_json(a)["checks"][0].contains("wall_ms"));
}

TEST_CASE("threaded verify equals sequential") {
    VerifySizes seq;
    seq.ps = {4};
    seq.order = 12;
    seq.nmax = 3;
    seq.Nmax = 4;
    seq.dmax = 8;
    seq.exact_cap = 6;
    VerifySizes par = seq;
    par.threads = 4;
    RunReport a = run_verify("all", seq);
    RunReport b = run_verify("all", par);
    CHECK(report_json(a).dump() == report_json(b).dump());
}

TEST_CASE("unknown check is rejected") {
    VerifySizes sizes;
    CHECK_THROWS_AS(run_verify("bogus", sizes), std::domain_error);
}
