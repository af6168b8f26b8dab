#include "modcheck/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace modcheck;
using namespace modcheck::report;
using nlohmann::json;

TEST_SUITE("report") {

TEST_CASE("suite names") {
    CHECK(suite_names() == std::vector<std::string>{"dm-tables", "hassett-strata", "cubic-pairs", "hilbert-flatness", "lattice"});
    CHECK_THROWS_AS(run("no-such-suite"), UnknownSuite);
    RunOptions bad;
    bad.jobs = 0;
    CHECK_THROWS_AS(run("lattice", bad), std::invalid_argument);
}

TEST_CASE("dm-tables suite") {
    auto rep = run("dm-tables");
    CHECK(rep.passed());
    CHECK(rep.count(Status::Pass) == rep.checks.size());
    std::size_t rows = 0;
    for (const auto& c : rep.checks)
        if (c.id.rfind("dm-tables/Eisenstein-", 0) == 0 || c.id.rfind("dm-tables/Gaussian-", 0) == 0) ++rows;
    CHECK(rows == 42);
    CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));
}

TEST_CASE("hassett-strata suite and census detail") {
    auto rep = run("hassett-strata");
    CHECK(rep.passed());
    bool census = false;
    for (const auto& c : rep.checks)
        if (c.id == "hassett-strata/census") {
            census = true;
            CHECK(c.detail.find("28") != std::string::npos);
            CHECK(c.detail.find("35") != std::string::npos);
        }
    CHECK(census);
    RunOptions o;
    o.n = 7;
    auto odd = run("hassett-strata", o);
    CHECK_FALSE(odd.passed());
}

TEST_CASE("hilbert-flatness suite") {
    auto rep = run("hilbert-flatness");
    CHECK(rep.passed());
    for (const auto& c : rep.checks)
        if (c.id == "hilbert-flatness/three-planes" || c.id == "hilbert-flatness/cayley") CHECK(c.detail.rfind("27m-108", 0) == 0);
    RunOptions tight;
    tight.degree_bound = 3;
    CHECK_FALSE(run("hilbert-flatness", tight).passed());
}

TEST_CASE("JSON is reproducible apart from timing") {
    RunOptions o;
    o.jobs = 2;
    for (const auto& suite : {"lattice", "cubic-pairs", "hassett-strata"}) {
        auto a = run(suite).to_json(false);
        auto b = run(suite, o).to_json(false);
        CHECK(a == b);
        CHECK(a.find("timing") == std::string::npos);
    }
    auto j = json::parse(run("lattice").to_json());
    CHECK(j["schema"] == "1");
    CHECK(j["suite"] == "lattice");
    CHECK(j.contains("timing"));
    CHECK(j["timing"].size() == j["checks"].size());
}

TEST_CASE("run all aggregates every suite") {
    auto all = run("all");
    std::size_t sum = 0;
    std::set<std::string> ids;
    for (const auto& s : suite_names()) {
        auto part = run(s);
        sum += part.checks.size();
        for (const auto& c : part.checks) ids.insert(c.id);
    }
    CHECK(all.checks.size() == sum);
    std::set<std::string> all_ids;
    for (const auto& c : all.checks) all_ids.insert(c.id);
    CHECK(all_ids == ids);
    CHECK(all.passed());
}

TEST_CASE("markdown and JSON list the same checks") {
    auto rep = run("dm-tables");
    auto md = rep.to_markdown();
    auto j = json::parse(rep.to_json());
    CHECK(j["checks"].size() == rep.checks.size());
    for (const auto& c : j["checks"]) CHECK(md.find(c["id"].get<std::string>()) != std::string::npos);
    CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("failing checks are reported, not thrown") {
    Report rep;
    rep.suite = "x";
    rep.checks.push_back({"x/a", "a", Status::Pass, "", 0});
    rep.checks.push_back({"x/b", "b", Status::Fail, "bad", 0});
    CHECK_FALSE(rep.passed());
    CHECK(rep.count(Status::Fail) == 1);
    auto j = json::parse(rep.to_json(false));
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(status_name(Status::Skip) == "skip");
}

TEST_CASE("pair renderings") {
    auto cfg = cubic::stratum_config(cubic::Stratum::A1Four);
    auto r = cubic::check_stable_pair(cfg);
    auto j = json::parse(pair_json(cfg, r, true));
    CHECK(j["stratum"] == "A1^4");
    CHECK(j["census"]["4"] == 6);
    CHECK(j["census"]["1"] == 3);
    CHECK(j["stable"] == true);
    auto plain = json::parse(pair_json(cfg, r, false));
    CHECK(plain["ampleness"][0] == "0");
    auto text = incidence_ascii(cubic::stratum_config(cubic::Stratum::A1CubeN));
    CHECK(text.find("x0 = 0") != std::string::npos);
}

}
