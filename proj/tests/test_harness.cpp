#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "thomae/harness.hpp"

using namespace thomae;

TEST_CASE("random curves") {
    auto a = random_curve(3, 1), b = random_curve(3, 1);
    CHECK(a.e == b.e);
    auto c = random_curve(2, 7);
    CHECK(c.num_finite() == 5);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto s = random_curve(4, seed);
        for (int i = 1; i <= s.num_finite(); ++i) {
            CHECK(s.at(i) >= -10.0);
            CHECK(s.at(i) <= 10.0);
            if (i > 1) CHECK(s.at(i) - s.at(i - 1) >= 0.3);
        }
    }
    CHECK(random_curve(3, 2).e != a.e);
}

TEST_CASE("family ids and tolerances") {
    CHECK(default_tolerance("THOMAE_I") == 1e-6);
    CHECK(default_tolerance("THOMAE_GEN") == 1e-5);
    CHECK(default_tolerance("GRAD3") == 1e-8);
    CHECK(default_tolerance("HESS_K4") == 1e-6);
    CHECK(default_tolerance("D3_K5") == 1e-4);
    CHECK(default_tolerance("SCHOTTKY") == 1e-7);
    CHECK_THROWS_AS(check_family("GRAD7"), HarnessError);
}

TEST_CASE("genus two suite passes") {
    SuiteConfig cfg;
    cfg.genus = 2;
    cfg.seed = 1;
    auto rep = run_suite(cfg);
    CHECK(rep.fail == 0);
    CHECK(rep.pass == rep.records.size());
    CHECK(rep.calibration.size() == 10);
    auto j = report_to_json(rep);
    for (auto key : {"curve", "periods", "calibration", "records", "summary", "timings"}) CHECK(j.contains(key));
    CHECK(j["summary"]["pass"] == rep.pass);
}

TEST_CASE("family filter and overrides") {
    SuiteConfig cfg;
    cfg.genus = 3;
    cfg.families = {"GRAD3"};
    cfg.tolerances["GRAD3"] = 1e-9;
    cfg.cap = 40;
    auto rep = run_suite(cfg);
    REQUIRE_FALSE(rep.records.empty());
    for (auto& r : rep.records) {
        CHECK(r.relation_id == "GRAD3");
        CHECK(r.tolerance == 1e-9);
    }
    // 40 sampled bindings plus the printed genus-3 closing relation
    CHECK(rep.records.size() == 41);

    cfg.families = {"GRAD3", "BOGUS"};
    CHECK_THROWS_AS(run_suite(cfg), HarnessError);
    cfg.families = {"GRAD3"};
    cfg.tolerances["GRAD3"] = -1.0;
    CHECK_THROWS_AS(run_suite(cfg), HarnessError);
}

TEST_CASE("reports are reproducible") {
    SuiteConfig cfg;
    cfg.genus = 3;
    cfg.seed = 5;
    cfg.cap = 60;
    auto a = report_to_json(run_suite(cfg)).dump();
    auto b = report_to_json(run_suite(cfg)).dump();
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
}

TEST_CASE("period cache is written and reused") {
    namespace fs = std::filesystem;
    auto path = fs::temp_directory_path() / "thomae_cache_test.json";
    fs::remove(path);
    SuiteConfig cfg;
    cfg.genus = 2;
    cfg.seed = 3;
    cfg.families = {"THOMAE_I"};
    cfg.period_cache = path.string();
    auto a = report_to_json(run_suite(cfg)).dump();
    CHECK(fs::exists(path));
    auto b = report_to_json(run_suite(cfg)).dump();
    CHECK(a == b);
    fs::remove(path);
}

TEST_CASE("text report") {
    SuiteConfig cfg;
    cfg.genus = 2;
    cfg.families = {"THOMAE_II"};
    auto text = report_to_text(run_suite(cfg));
    CHECK(text.find("PASS THOMAE_II") != std::string::npos);
    CHECK(text.find("summary pass 6 fail 0") != std::string::npos);
}
