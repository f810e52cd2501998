#include "credal/scenario.hpp"

#include "credal/oracle.hpp"
#include "credal/report.hpp"

#include <doctest.h>

using namespace credal;

namespace {

const char* kMinimalDoc = R"({
  "name": "tiny",
  "x_labels": ["l", "r"],
  "y_labels": ["0", "1"],
  "a_labels": ["0", "1"],
  "loss": [["0", "1"], ["1", "0"]],
  "vertices": [
    [["1/4", "1/4"], ["1/4", "1/4"]],
    [["1/2", "0"], ["0", "1/2"]]
  ],
  "partitions": {"all": [["l", "r"]]}
})";

} // namespace

TEST_CASE("scenario round-trips structurally") {
    for (const auto& name : builtin_names()) {
        const Scenario a = builtin_scenario(name);
        const Scenario b = parse_scenario(serialize_scenario(a));
        CHECK(a.name == b.name);
        CHECK(a.space.x_labels == b.space.x_labels);
        CHECK(a.space.y_labels == b.space.y_labels);
        CHECK(a.space.a_labels == b.space.a_labels);
        CHECK(a.loss.table() == b.loss.table());
        CHECK(a.credal.same_set(b.credal));
        REQUIRE(a.partitions.size() == b.partitions.size());
        for (size_t i = 0; i < a.partitions.size(); ++i) {
            CHECK(a.partitions[i].first == b.partitions[i].first);
            CHECK(a.partitions[i].second == b.partitions[i].second);
        }
        CHECK(serialize_scenario(a) == serialize_scenario(b));
    }
    const Scenario tiny = parse_scenario(kMinimalDoc);
    CHECK(serialize_scenario(parse_scenario(serialize_scenario(tiny))) ==
          serialize_scenario(tiny));
}

TEST_CASE("builtins satisfy the credal invariants") {
    for (const auto& name : builtin_names()) {
        const Scenario s = builtin_scenario(name);
        // minimal vertex lists: re-normalization changes nothing
        const CredalSet again(s.credal.nx(), s.credal.ny(), s.credal.vertices());
        CHECK(again.vertices() == s.credal.vertices());
        for (const auto& v : s.credal.vertices()) {
            Rational sum = 0;
            for (const auto& e : v.entries()) {
                CHECK(e >= 0);
                sum += e;
            }
            CHECK(sum == 1);
        }
    }
    CHECK(builtin_scenario("example1").credal.vertices().size() == 4);
    CHECK(builtin_scenario("monty_hall").credal.vertices().size() == 2);
    CHECK(builtin_scenario("walley_coins").credal.vertices().size() == 2);
    CHECK_THROWS_AS(builtin_scenario("nope"), ScenarioError);
}

TEST_CASE("validation errors carry the offending field") {
    SUBCASE("vertex mass must sum to 1") {
        std::string doc = kMinimalDoc;
        const auto pos = doc.find("\"1/2\", \"0\"");
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, 10, "\"2/5\", \"0\"");
        CHECK_THROWS_WITH_AS(parse_scenario(doc),
                             doctest::Contains("vertices[1]"), ScenarioError);
    }
    SUBCASE("partition labels must be declared") {
        std::string doc = kMinimalDoc;
        const auto pos = doc.find("[[\"l\", \"r\"]]");
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, 12, "[[\"l\", \"oops\"]]");
        CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("oops"), ScenarioError);
    }
    SUBCASE("floats are rejected") {
        std::string doc = kMinimalDoc;
        const auto pos = doc.find("\"1/4\"");
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, 5, "\"0.25\"");
        CHECK_THROWS_AS(parse_scenario(doc), ScenarioError);
    }
    SUBCASE("wrong row counts are named") {
        std::string doc = kMinimalDoc;
        const std::string needle = "[[\"0\", \"1\"], [\"1\", \"0\"]]";
        const auto pos = doc.find(needle);
        REQUIRE(pos != std::string::npos);
        doc.replace(pos, needle.size(), "[[\"0\", \"1\"]]");
        CHECK_THROWS_WITH_AS(parse_scenario(doc), doctest::Contains("loss"), ScenarioError);
    }
    SUBCASE("json syntax errors are reported as parse errors") {
        CHECK_THROWS_WITH_AS(parse_scenario("{"), doctest::Contains("parse error"),
                             ScenarioError);
    }
    SUBCASE("every missing required field is reported, never a crash") {
        for (const char* field :
             {"\"name\"", "\"x_labels\"", "\"y_labels\"", "\"a_labels\"", "\"loss\"",
              "\"vertices\""}) {
            std::string doc = kMinimalDoc;
            const auto pos = doc.find(field);
            REQUIRE(pos != std::string::npos);
            doc.replace(pos, std::string(field).size(), "\"renamed\"");
            CHECK_THROWS_AS(parse_scenario(doc), ScenarioError);
        }
    }
}

TEST_CASE("reports are byte-stable") {
    const Scenario s = builtin_scenario("example1");
    const GameSolution sol = solve_apriori(s.credal, s.loss);
    const auto cert = certify_equilibrium(s.credal, s.loss, sol);
    const auto oracle = certify_with_oracles(s.credal, s.loss, sol);
    for (bool json : {false, true}) {
        const std::string a = render_apriori_report(s, sol, cert, oracle, {json});
        const std::string b = render_apriori_report(s, solve_apriori(s.credal, s.loss), cert,
                                                    oracle, {json});
        CHECK(a == b);
        CHECK(a.find("1/3") != std::string::npos);
        CHECK(a.find("all_pass") != std::string::npos);
    }
    const auto inconsistency = detect_time_inconsistency(s.credal, s.loss);
    const std::string rep = render_inconsistency_report(s, inconsistency, {false});
    CHECK(rep.find("flagged: true") != std::string::npos);
    CHECK(rep.find("act_gap: 1/2") != std::string::npos);
}
