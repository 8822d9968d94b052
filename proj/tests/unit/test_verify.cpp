#include "rhombil/errors.hpp"
#include "rhombil/verify.hpp"

#include <doctest.h>

using namespace rhombil;

TEST_SUITE("verify") {

TEST_CASE("sequence enumeration")
{
    CHECK(sequences({2}, 0, 2).size() == 9);
    CHECK(sequences({1, 3}, 1, 2).size() == 2 + 8);
    CHECK(sequences({0}, 0, 5).size() == 1);
}

TEST_CASE("grids give every family at least 20 points")
{
    for (Family f : {Family::P, Family::Pp}) {
        GridSpec g;
        g.family = f;
        g.max_param = 3;
        CHECK(enumerate(g).size() >= 20);
    }
    for (Family f : {Family::Q, Family::Qp, Family::K, Family::Kp}) {
        GridSpec g;
        g.family = f;
        g.lengths = {2, 4};
        CHECK(enumerate(g).size() >= 20);
    }
    for (int m = 1; m <= 8; ++m) {
        GridSpec g;
        g.family = h_family(m);
        CHECK(enumerate(g).size() >= 20);
    }
    GridSpec s;
    s.family = Family::S;
    s.lengths = {1, 2};
    s.min_entry = 1;
    CHECK(enumerate(s).size() >= 20);
}

TEST_CASE("records carry an exact delta")
{
    GridSpec g;
    g.family = Family::Qp;
    g.lengths = {2};
    const auto recs = verify_family(g);
    REQUIRE_FALSE(recs.empty());
    for (const auto& r : recs) {
        CHECK(r.pass == (r.delta() == 0));
        CHECK(to_json_line(r).find("\"identity\":\"" + r.identity + "\"") != std::string::npos);
    }
    CHECK(summarize(recs).failed == 0);
}

TEST_CASE("a wrong convention shows up as failures")
{
    VerifyOptions opt;
    opt.conventions.h2 = H2Reading::Printed;
    GridSpec g;
    g.family = Family::Q;
    g.lengths = {2, 4};
    CHECK(summarize(verify_family(g, opt)).failed > 0);
}

TEST_CASE("claims are deterministic for a seed")
{
    const auto a = verify_claims(10, 99), b = verify_claims(10, 99), c = verify_claims(10, 100);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json_line(a[i]) == to_json_line(b[i]));
    bool differs = a.size() != c.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = a[i].point != c[i].point;
    CHECK(differs);
}

TEST_CASE("results do not depend on the number of jobs")
{
    GridSpec g;
    g.family = Family::H5;
    g.max_param = 1;
    VerifyOptions one, three;
    three.jobs = 3;
    const auto a = verify_family(g, one), b = verify_family(g, three);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json_line(a[i]) == to_json_line(b[i]));
}

TEST_CASE("summary table ends with the totals")
{
    VerdictRecord pass{"x", "p", 1, 1, true, false, ""};
    VerdictRecord fail{"y", "q", 1, 2, false, false, ""};
    const std::string t = summary_table({pass, fail});
    CHECK(t.find("TOTAL") != std::string::npos);
    const Summary s = summarize({pass, fail});
    CHECK(s.passed == 1);
    CHECK(s.failed == 1);
}

TEST_CASE("calibration settles every switch on the shipped choice")
{
    const CalibrationReport rep = calibrate_geometry();
    CHECK(rep.switches.size() == 11);
    for (const auto& s : rep.switches) {
        CAPTURE(s.name);
        CHECK(s.resolved());
        CHECK(s.chosen() == s.frozen);
    }
    CHECK_NOTHROW(require_resolved(rep));

    CalibrationReport broken = rep;
    broken.switches[0].passed.assign(broken.switches[0].passed.size(), true);
    CHECK_THROWS_AS(require_resolved(broken), AmbiguousCalibration);
    broken.switches[0].passed.assign(broken.switches[0].passed.size(), false);
    CHECK_THROWS_AS(require_resolved(broken), NoVariantPasses);
}

}
