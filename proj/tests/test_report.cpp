#include "doctest.h"

#include "pathpower/report.hpp"

using namespace pathpower;

TEST_CASE("sub-seeds are stable and distinct") {
    CHECK(sub_seed("huang_chain", kDefaultSeed) == sub_seed("huang_chain", kDefaultSeed));
    CHECK(sub_seed("huang_chain", kDefaultSeed) != sub_seed("odd_spectra", kDefaultSeed));
    CHECK(sub_seed("huang_chain", kDefaultSeed) != sub_seed("huang_chain", kDefaultSeed + 1));
}

TEST_CASE("random_subset") {
    const PathPower g(4, 2);
    std::mt19937_64 a(11), b(11);
    const VertexSet s = random_subset(g, 9, a);
    CHECK(s.size() == 9);
    CHECK(s == random_subset(g, 9, b));
    CHECK(random_subset(g, 16, a).size() == 16);
    CHECK(random_subset(g, 0, a).empty());
    CHECK_THROWS(random_subset(g, 17, a));
}

TEST_CASE("verify-all passes on small instances") {
    const Report r = run_verify_all({.max_size = 9});
    CHECK(r.pass());
    CHECK(r.checks.size() == 9);
    for (const CheckResult& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    REQUIRE(r.find("huang_chain"));
    CHECK(r.find("nope") == nullptr);
}

TEST_CASE("verify-all default run") {
    const Report r = run_verify_all();
    for (const CheckResult& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.error);
        CHECK(c.pass);
    }
    CHECK(r.to_json()["pass"] == true);
}

TEST_CASE("verify-all catches a corrupted matrix") {
    VerifyOptions o{.max_size = 27};
    o.matrix_hook = [](SignedMatrix::Storage& s) {
        if (s.rows() > 1) s.coeffRef(0, 1) = 0;
    };
    const Report r = run_verify_all(o);
    REQUIRE(r.find("exact_structure"));
    CHECK_FALSE(r.find("exact_structure")->pass);
    CHECK_FALSE(r.pass());
    CHECK(r.find("beta_values")->pass);
}

TEST_CASE("reports are deterministic") {
    const VerifyOptions o{.max_size = 81, .seed = 12345};
    CHECK(run_verify_all(o).to_json(false) == run_verify_all(o).to_json(false));
    const auto j = run_verify_all(o).to_json(false);
    CHECK(j["config"]["seed"] == 12345);
    CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("report CSV") {
    const std::string csv = run_verify_all({.max_size = 9}).to_csv(false);
    CHECK(csv.rfind("name,pass", 0) == 0);
    CHECK(csv.find("huang_chain,pass") != std::string::npos);
}

TEST_CASE("beta table") {
    const auto rows = export_table(TableKind::Beta, {1, 6}, {1, 1});
    REQUIRE(rows.size() == 6);
    CHECK(rows[0]["beta"].get<double>() == 1.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i]["beta"].get<double>() < rows[i - 1]["beta"].get<double>());
    }
    CHECK(export_table(TableKind::Beta, {1001, 1001}, {1, 1})[0]["status"] == "skipped");
}

TEST_CASE("bounds table") {
    const auto rows = export_table(TableKind::Bounds, {2, 7}, {1, 4});
    CHECK(rows.size() == 24);
    for (const auto& row : rows) {
        if (row["status"] != "ok") continue;
        const int m = row["m"];
        if (m == 3) CHECK(row["value"] == 2);
        if (m % 2 == 1 && m >= 5) CHECK(row["value"] == 1);
        if (m % 2 == 1) CHECK(row["kind"] == "exact");
        if (m % 2 == 0) CHECK(row["kind"] == "lower");
    }
    const auto capped = export_table(TableKind::Bounds, {7, 7}, {6, 6});
    CHECK(capped[0]["status"] == "skipped");
}

TEST_CASE("alpha table and CSV") {
    const auto rows = export_table(TableKind::Alpha, {2, 5}, {1, 3});
    for (const auto& row : rows) {
        const int m = row["m"], k = row["k"];
        const long long n = static_cast<long long>(std::pow(m, k));
        CHECK(row["value"].get<long long>() == (n + 1) / 2);
    }
    const std::string csv = table_to_csv(rows);
    CHECK(csv.rfind("k,kind,m,status,value\n", 0) == 0);
    CHECK(csv.find("\n2,exact,3,ok,5\n") != std::string::npos);
    CHECK(parse_table_kind("beta") == TableKind::Beta);
    CHECK_THROWS_AS(parse_table_kind("gamma"), std::invalid_argument);
}
