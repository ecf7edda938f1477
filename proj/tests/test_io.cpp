#include <doctest.h>

#include "inctab/gallery.hpp"
#include "inctab/json_io.hpp"
#include "inctab/verify.hpp"

using namespace inctab;

TEST_SUITE("io") {

TEST_CASE("tableau JSON round-trip with schema tag") {
    const auto t = IncreasingTableau::from_rows({{1, 2, 4}, {3, 4, 5}});
    const auto j = to_json(t);
    CHECK(j["schema"] == "inctab.tableau.v1");
    CHECK(tableau_from_json(j) == t);
    CHECK(tableau_from_json(Json::parse(R"({"rows": [[1,2,4],[3,4,5]]})")) == t);
    CHECK(tableau_from_json(Json::parse("[[1,2,4],[3,4,5]]")) == t);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"schema": "other", "rows": [[1]]})")), InputError);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows": [[1, "x"]]})")), InputError);
    CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows": [[1,1]]})")), TableauError);
}

TEST_CASE("compact tableau syntax") {
    const auto t = IncreasingTableau::from_rows({{1, 2, 4}, {3, 4, 5}});
    CHECK(parse_tableau("124;345") == t);
    CHECK(parse_tableau("1,2,4;3,4,5") == t);
    CHECK(parse_tableau(" 1 2 4 ; 3 4 5 ") == t);
    CHECK(parse_tableau(R"({"rows":[[1,2,4],[3,4,5]]})") == t);
    CHECK(parse_tableau("1,2,4,7;3,5,6,8;5,7,8,10;7,9,10,11").max_entry() == 11);
    CHECK_THROWS_AS(parse_tableau(""), InputError);
    CHECK_THROWS_AS(parse_tableau("{oops"), InputError);
    CHECK_THROWS_AS(parse_tableau("12x"), InputError);
}

TEST_CASE("partition JSON") {
    const NCPartition p(8, {{1, 2, 3}, {4, 8}, {5, 6, 7}});
    const auto j = to_json(p);
    CHECK(j["n"] == 8);
    CHECK(j["blocks"] == Json::parse("[[1,2,3],[4,8],[5,6,7]]"));
    CHECK(ncpartition_from_json(j) == p);
    CHECK_THROWS_AS(ncpartition_from_json(Json::parse(R"({"n": 3})")), InputError);
}

TEST_CASE("CSP report JSON uses the documented keys") {
    const auto j = to_json(csp_promotion(3, 1));
    CHECK(j["schema"] == "inctab.csp.v1");
    REQUIRE(j["entries"].size() == 5);
    const auto& e = j["entries"][0];
    CHECK(e.contains("m"));
    CHECK(e.contains("fixed"));
    CHECK(e.contains("f_value"));
    CHECK(e.contains("ok"));
    CHECK(e["f_value"] == "5");
}

TEST_CASE("every worked example reproduces") {
    for (const auto& id : gallery_ids()) {
        const auto r = run_example(id);
        CHECK_MESSAGE(r.ok(), id << ": " << (r.mismatches.empty() ? "" : r.mismatches.front()));
        CHECK_FALSE(r.rendered.empty());
    }
    CHECK_THROWS_AS(run_example("fig9"), InputError);
}

TEST_CASE("verification suites at small bounds") {
    VerifyConfig config;
    config.n_max = 4;
    config.identities_max_n = 12;
    config.typeb_max_n = 4;
    config.random_rows = 20;
    config.jobs = 2;
    const auto results = run_suite("all", config);
    CHECK(all_ok(results));
    CHECK(results.size() > 20);
    CHECK(to_json(results)["ok"] == true);
    CHECK_THROWS_AS(run_suite("nope", config), InputError);
    config.n_max = 9;
    CHECK_THROWS_AS(run_suite("csp", config), InputError);
}

}
