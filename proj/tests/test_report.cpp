#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "wlab/serialize.hpp"

using namespace wlab;

TEST_CASE("config parsing") {
    const char* path = "wlab_test_config.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "p_list = 3, 5, 7\n";
        out << "q_order = 60\n";
        out << "closure_order = 150\n";
        out << "oracle_budget_seconds = 30\n";
        out << "worker_count = 2\n";
        out << "theta_normalizations = 1, 6, 12\n";
    }
    RunConfig cfg = parse_config_file(path);
    CHECK(cfg.p_list == std::vector<int>{3, 5, 7});
    CHECK(cfg.q_order == 60);
    CHECK(cfg.closure_order == 150);
    CHECK(cfg.oracle_budget_seconds == 30);
    CHECK(cfg.worker_count == 2);
    REQUIRE(cfg.theta_normalizations.size() == 3);
    CHECK(cfg.theta_normalizations[1] == Rational(6));
    std::remove(path);

    RunConfig base;
    CHECK_THROWS_AS(apply_config_entry(base, "p_list", "4"), UsageError);
    CHECK_THROWS_AS(apply_config_entry(base, "no_such_key", "1"), UsageError);
    CHECK_THROWS_AS(apply_config_entry(base, "q_order", "0"), UsageError);
    apply_config_entry(base, "worker_count", "auto");
    CHECK(base.worker_count == 0);
}

TEST_CASE("suite status aggregation") {
    SuiteReport report;
    report.entries.push_back({"a", Json::object(), CheckStatus::pass, Json::object(), 1});
    CHECK(report.overall() == CheckStatus::pass);
    CHECK_FALSE(report.failed());

    report.entries.push_back({"b", Json::object(), CheckStatus::finding, Json::object(), 1});
    CHECK(report.overall() == CheckStatus::finding);

    report.entries.push_back({"c", Json::object(), CheckStatus::shape_only, Json::object(), 1});
    CHECK(report.overall() == CheckStatus::shape_only);

    report.entries.push_back({"d", Json::object(), CheckStatus::fail, Json::object(), 1});
    CHECK(report.overall() == CheckStatus::fail);
    CHECK(report.failed());
}

TEST_CASE("laurent debug serialization") {
    LaurentPoly d = vandermonde_power(2, 1);
    Json j = json_of(d);
    CHECK(j["nvars"] == 2);
    CHECK(j["terms"].dump() == "[[[0,1],[\"-1\"]],[[1,0],[\"1\"]]]");
}

TEST_CASE("serialization round trips") {
    Poly f(std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-3)});
    CHECK(poly_from_json(json_of(f)) == f);
    CHECK(json_of(f).dump() == "[\"1/2\",\"0\",\"-3\"]");

    ResidueResult r;
    r.params = {1, 2, 1, 0, true};
    r.value = Poly(Rational(1));
    Json j = json_of(r);
    CHECK(j["params"]["n"] == 1);
    CHECK(j["provenance"] == "oracle");
    CHECK(j["poly"][0] == "1");

    QSeries s = QSeries::from_lattice(24, -1, {Rational(1), Rational(0), Rational(2)},
                                      Rational(5));
    Json js = json_of(s);
    CHECK(js["denom"] == 24);
    CHECK(js["offset"] == -1);
    CHECK(js["order"] == "5");
    CHECK(qseries_csv(s) == "exponent,coefficient\n-1/24,1\n1/24,2\n");
}

TEST_CASE("reports are byte-identical apart from the elapsed fields") {
    auto build = [](long long elapsed) {
        SuiteReport report;
        Json params = Json{{"p", 3}};
        Json data = Json{{"value", "35/3"}};
        report.entries.push_back({"check", params, CheckStatus::pass, data, elapsed});
        return report;
    };
    Json a = build(10).to_json();
    Json b = build(99).to_json();
    a["checks"][0].erase("elapsed_ms");
    b["checks"][0].erase("elapsed_ms");
    CHECK(a.dump() == b.dump());
}
