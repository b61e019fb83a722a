#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "staircase/census.hpp"
#include "staircase/format.hpp"
#include "staircase/serialize.hpp"
#include "test_support.hpp"

using namespace staircase;

TEST_CASE("strict partitions validate and convert") {
    StrictPartition p(std::vector<int>{3, 2, 1});
    REQUIRE(p.weight() == 6);
    REQUIRE(p.to_two_var_ideal() == power_ideal(2, 3));
    REQUIRE_THROWS_AS(StrictPartition(std::vector<int>{2, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(StrictPartition(std::vector<int>{1, 2}), std::invalid_argument);
    REQUIRE(StrictPartition().to_two_var_ideal().is_unit());
}

TEST_CASE("small strongly stable counts against the brute-force filter") {
    REQUIRE(enumerate_strongly_stable(1).size() == 1);
    REQUIRE(enumerate_strongly_stable(1).front() == power_ideal(3, 1));
    REQUIRE(enumerate_strongly_stable(2).size() == 1);
    REQUIRE(enumerate_strongly_stable(2).front() == parse_ideal("x, y, z^2"));
    REQUIRE(enumerate_strongly_stable(3).size() == 2);

    for (long long d = 1; d <= 8; ++d) {
        std::set<std::string> stream;
        enumerate_strongly_stable(d, [&](const MonomialIdeal& m) {
            REQUIRE(colength(m) == d);
            REQUIRE(stream.insert(to_text(m)).second);  // no duplicates
        });
        std::set<std::string> filtered;
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& m) {
            if (test_support::strongly_stable_full_check(m)) filtered.insert(to_text(m));
        });
        CAPTURE(d);
        REQUIRE(stream == filtered);
    }
}

TEST_CASE("enumeration is deterministic across runs") {
    auto run = [](long long d) {
        std::string out;
        enumerate_strongly_stable(d, [&](const MonomialIdeal& m) { out += to_text(m) + "\n"; });
        return out;
    };
    REQUIRE(run(9) == run(9));
    auto all_run = [](long long d) {
        std::string out;
        enumerate_all_artinian(3, d, [&](const MonomialIdeal& m) { out += to_text(m) + "\n"; });
        return out;
    };
    REQUIRE(all_run(7) == all_run(7));
}

TEST_CASE("exhaustive enumeration counts match the generating functions") {
    const auto partitions = test_support::euler_product_counts(10, false);
    const auto plane = test_support::euler_product_counts(8, true);
    for (long long d = 1; d <= 10; ++d)
        REQUIRE(static_cast<long long>(enumerate_all_artinian(2, d).size()) == partitions[d]);
    for (long long d = 1; d <= 8; ++d)
        REQUIRE(static_cast<long long>(enumerate_all_artinian(3, d).size()) == plane[d]);
    REQUIRE(enumerate_all_artinian(3, 2).size() == 3);
    REQUIRE(enumerate_all_artinian(3, 3).size() == 6);
    REQUIRE(enumerate_all_artinian(2, 5).size() == 7);
}

TEST_CASE("enumeration guards") {
    REQUIRE_THROWS_AS(enumerate_strongly_stable(61), BudgetError);
    REQUIRE_THROWS_AS(enumerate_all_artinian(3, 11), BudgetError);
    REQUIRE_THROWS_AS(enumerate_all_artinian(4, 3), std::invalid_argument);
    // the override lifts the census budget
    long long count = 0;
    enumerate_strongly_stable(5, [&](const MonomialIdeal&) { ++count; }, true);
    REQUIRE(count == enumerate_strongly_stable(5).size());
}

TEST_CASE("census records carry checked invariants and flags") {
    auto rec = record_from_report(tangent_report(power_ideal(3, 3)), true);
    REQUIRE(rec.d == 10);
    REQUIRE(rec.total == 60);
    REQUIRE(rec.min_x_power == 3);
    REQUIRE(rec.flags == "fat(3);lex");

    auto rec_e = record_from_report(tangent_report(lex_truncation_ideal(16)), true);
    REQUIRE(rec_e.flags == "lex");
    auto rec_j = record_from_report(tangent_report(counterexample_ideal(3, 2)), true);
    REQUIRE(rec_j.flags == "cx(3,2)");
    REQUIRE(rec_j.total == 88);
    REQUIRE(rec_j.socle == 77);
}

TEST_CASE("csv rows quote the ideal text") {
    auto rec = record_from_report(tangent_report(power_ideal(3, 1)), true);
    std::ostringstream os;
    write_census_csv_header(os);
    write_census_csv_row(os, rec);
    REQUIRE(os.str() ==
            "ideal,d,total,ppn,pnp,npp,pnn,npn,nnp,socle,min_x_power,flags\n"
            "\"x, y, z\",1,3,1,1,1,0,0,0,3,1,\"fat(1);lex\"\n");
}

TEST_CASE("search extremes at the tetrahedral colength picks the fat point") {
    auto records = search_extremes(10);
    REQUIRE(records.size() == enumerate_strongly_stable(10).size());
    REQUIRE(records.front().ideal == to_text(power_ideal(3, 3)));
    REQUIRE(records.front().total == 60);
    REQUIRE(records.size() >= 2);
    REQUIRE(records[1].total < 60);  // unique maximizer here
    for (std::size_t i = 1; i < records.size(); ++i)
        REQUIRE(records[i - 1].total >= records[i].total);
}

TEST_CASE("search extremes filter drops small x powers before computing") {
    CensusFilter filter;
    filter.exclude_x_power = 2;
    auto records = search_extremes(8, filter);
    for (const auto& rec : records) REQUIRE(rec.min_x_power > 2);
    long long expected = 0;
    enumerate_strongly_stable(8, [&](const MonomialIdeal& m) {
        if (filter.keep(m)) ++expected;
    });
    REQUIRE(static_cast<long long>(records.size()) == expected);
}

TEST_CASE("parallel map preserves order and results") {
    std::vector<int> in(257);
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = static_cast<int>(i);
    auto serial = ordered_parallel_map(in, 1, [](int v) { return v * v; });
    auto parallel = ordered_parallel_map(in, 4, [](int v) { return v * v; });
    REQUIRE(serial == parallel);
}

TEST_CASE("counterexample report for the smallest parameter") {
    auto rep = counterexample_report(3);
    REQUIRE(rep.d == 16);
    REQUIRE(rep.e_total == 84);
    REQUIRE(rep.e_formula == 84);
    REQUIRE(rep.e_socle == 77);
    REQUIRE(rep.j_total == 88);
    REQUIRE(rep.j_socle == 77);
    REQUIRE(rep.strict);
    REQUIRE_THROWS_AS(counterexample_report(2), std::invalid_argument);
}

TEST_CASE("verify suite passes at desk scale") {
    auto report = verify_theorem_suite(6, true);
    for (const auto& check : report.checks) {
        CAPTURE(check.name, check.counterexample);
        REQUIRE(check.pass);
        REQUIRE(check.cases > 0);
    }
    REQUIRE(report.all_pass);
    REQUIRE(report.checks.size() >= 15);
}

TEST_CASE("verify report serialization carries failures") {
    VerifyReport report;
    report.checks.push_back({"demo-pass", true, 5, ""});
    report.checks.push_back({"demo-fail", false, 3, "x, y, z^2"});
    report.all_pass = false;
    auto j = verify_report_to_json(report);
    REQUIRE(j["all_pass"] == false);
    REQUIRE(j["checks"][1]["counterexample"] == "x, y, z^2");
}

TEST_CASE("tangent report json is stable and complete") {
    auto j = report_to_json(tangent_report(parse_ideal("x, y, z")));
    REQUIRE(j["ideal"] == "x, y, z");
    REQUIRE(j["d"] == 1);
    REQUIRE(j["total"] == 3);
    REQUIRE(j["signatures"]["ppn"] == 1);
    REQUIRE(j["per_degree"].size() == 3);
    // multidegrees are sorted lexicographically
    REQUIRE(j["per_degree"][0][0] == nlohmann::json::array({-1, 0, 0}));
}
