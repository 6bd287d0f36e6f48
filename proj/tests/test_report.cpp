#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "linf/report.hpp"

using namespace linf;

namespace {

bool rows_equal(const ExtremalRecord& a, const ExtremalRecord& b) {
    return a.theorem == b.theorem && a.n == b.n && a.k == b.k && a.s == b.s && a.t == b.t &&
           a.host == b.host && a.mode == b.mode && a.formula == b.formula &&
           a.oracle == b.oracle && a.match == b.match && a.witness_g6 == b.witness_g6 &&
           a.millis == b.millis;
}

}  // namespace

TEST_CASE("CSV round-trip is lossless, including quoted bipartite witnesses") {
    VerificationReport report;
    report.mode = "full";
    report.ranges = "theorem=edges-linforest n=2..6 k=1..max";

    VerifySweep sweep;
    sweep.n_max = 5;
    report.rows = verify_theorem(TheoremId::edges_linforest, sweep);
    // one bipartite row so the witness field carries a comma
    report.rows.push_back(extremal_count_bipartite(3, 3, 1, 1));

    std::stringstream ss;
    write_report_csv(ss, report);
    VerificationReport back = read_report_csv(ss);

    CHECK(back.tool_version == report.tool_version);
    CHECK(back.mode == report.mode);
    CHECK(back.ranges == report.ranges);
    REQUIRE(back.rows.size() == report.rows.size());
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(rows_equal(back.rows[i], report.rows[i]));
    }
    CHECK(back.pass() == report.pass());
}

TEST_CASE("pass only when every row matches") {
    VerificationReport report;
    CHECK(report.pass());  // vacuously

    ExtremalRecord good;
    good.theorem = "edges-linforest";
    good.formula = Count(4);
    good.oracle = Count(4);
    good.match = true;
    report.rows.push_back(good);
    CHECK(report.pass());

    ExtremalRecord bad = good;
    bad.match = false;
    report.rows.push_back(bad);
    CHECK_FALSE(report.pass());
}

TEST_CASE("malformed CSV is rejected") {
    std::stringstream no_header("edges-linforest,2,1,2,0,unrestricted,full,0,0,true,A?,0\n");
    CHECK_THROWS_AS(read_report_csv(no_header), std::invalid_argument);

    std::stringstream wrong_cols(
        "theorem,n,k\nedges-linforest,2,1\n");
    CHECK_THROWS_AS(read_report_csv(wrong_cols), std::invalid_argument);

    std::stringstream bad_mode(
        "theorem,n,k,s,t,host,mode,formula,oracle,match,witness_g6,millis\n"
        "edges-linforest,2,1,2,0,unrestricted,warp,0,0,true,A?,0\n");
    CHECK_THROWS_AS(read_report_csv(bad_mode), std::invalid_argument);

    std::stringstream bad_match(
        "theorem,n,k,s,t,host,mode,formula,oracle,match,witness_g6,millis\n"
        "edges-linforest,2,1,2,0,unrestricted,full,0,0,yes,A?,0\n");
    CHECK_THROWS_AS(read_report_csv(bad_match), std::invalid_argument);
}
