#include <catch2/catch_amalgamated.hpp>

#include "ringlab/suite.hpp"

using namespace ringlab;

TEST_CASE("corpus construction") {
    auto corp = corpus(32, 7);
    CHECK(corp.entries.size() >= catalog_exprs().size());
    for (const auto& e : corp.entries) {
        CHECK(e.ring->size() <= 32);
        CHECK_FALSE(e.subrings.empty());
        // prime subring comes first, the full ring is a member
        CHECK(e.subrings.front().size() <= e.subrings.back().size());
        CHECK(e.subrings.back().size() == e.ring->size());
    }
    // the non-seminormal pair F2 in F2[x]/(x^2) is present
    bool has_dual = false;
    for (const auto& e : corp.entries) has_dual |= e.expr == "Z/2[x]/(x^2)";
    CHECK(has_dual);

    // and the corpus is pair-rich
    CHECK(corp.pairs().size() >= 200);
}

TEST_CASE("suite runs are deterministic") {
    auto a = run_suite("poly", 16, 7);
    auto b = run_suite("poly", 16, 7);
    auto ja = report_json(a, 7, 16, default_limits()).dump(2);
    auto jb = report_json(b, 7, 16, default_limits()).dump(2);
    CHECK(ja == jb);

    // parallel execution merges to the same bytes
    auto c = run_suite("examples", 16, 7, default_limits(), 4);
    auto d = run_suite("examples", 16, 7, default_limits(), 1);
    CHECK(report_json(c, 7, 16, default_limits()).dump() ==
          report_json(d, 7, 16, default_limits()).dump());
}

TEST_CASE("individual suites come back clean") {
    for (const char* id : {"poly", "examples"}) {
        auto run = run_suite(id, 16, 7);
        CAPTURE(id);
        CHECK_FALSE(run.has_counterexample);
        CHECK_FALSE(run.findings.empty());
    }
}

TEST_CASE("unknown suite ids are rejected") {
    CHECK_THROWS_MATCHES(run_suite("nope", 16, 7), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == "usage";
                         }));
}

TEST_CASE("finding serialization") {
    Finding f{"sl-tower-law", "Z/6", Finding::Verdict::Confirmed, ""};
    auto j = findings_json({f});
    CHECK(j[0]["theorem"] == "sl-tower-law");
    CHECK(j[0]["verdict"] == "confirmed");
}
