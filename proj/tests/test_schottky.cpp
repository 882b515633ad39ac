#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "thomae/schottky.hpp"

using namespace thomae;

TEST_CASE("syzygy test") {
    HalfChar z{4, 0, 0};
    CHECK(syzygy_test(z, z, z) == Syzygy::syzygetic);
    auto a = theta_char(4, {1, 2, 3, 4}), b = theta_char(4, {1, 2, 5, 6});
    CHECK(syzygy_test(a, a, b) == Syzygy::syzygetic);
}

TEST_CASE("Goepel group from branch point sums") {
    auto P = build_goepel(4, {{1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}});
    CHECK(P.rank() == 3);
    CHECK(P.syzygetic);
    std::vector<IndexSet> expect{{}, {1, 2}, {1, 2, 3}, {3}, {1, 2, 3, 4, 5}, {3, 4, 5}, {4, 5}, {1, 2, 4, 5}};
    CHECK(P.elements == expect);
    auto coset = P.coset({1, 4, 6, 8});
    CHECK(coset[1] == IndexSet{2, 4, 6, 8});
    CHECK_THROWS_AS(build_goepel(4, {{1, 2}, {1, 2}}), RelationError);
}

TEST_CASE("coset representatives form an azygetic triple") {
    auto c = schottky_case("schottky.F69");
    REQUIRE(c.A.size() == 3);
    auto ch = [&](const IndexSet& s) { return theta_char(4, s); };
    CHECK(syzygy_test(ch(c.A[0]), ch(c.A[1]), ch(c.A[2])) == Syzygy::azygetic);
    const auto& cx = testutil::context(4);
    auto r = verify_schottky_R(cx, {6, 7, 8, 9}, {6, 7, 8, 9}, 2, 4);
    CHECK_MESSAGE(r.pass, r.notes);
}

TEST_CASE("exact branch point identity") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        int g = 4 + t % 2;
        auto spec = random_curve(g, 100 + t);
        std::vector<int> idx;
        for (int i = 1; i <= 2 * g + 1; ++i) idx.push_back(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> p(idx.begin(), idx.begin() + 4);
        std::sort(p.begin(), p.end());
        CHECK(exact_a_identity(spec, p));
    }
}

TEST_CASE("rank one relation at genus four and five") {
    for (int g : {4, 5}) {
        const auto& cx = testutil::context(g, 2);
        auto r = verify_schottky_case(cx, "schottky.R", 1e-8);
        CHECK_MESSAGE(r.pass, r.notes);
    }
}

TEST_CASE("explicit root-sum cases") {
    for (auto& id : schottky_case_ids()) {
        if (id == "schottky.R") continue;
        auto c = schottky_case(id);
        for (std::uint64_t seed : {1, 2}) {
            CAPTURE(id);
            auto r = verify_root_sum(testutil::context(c.genus, seed), c);
            CHECK_MESSAGE(r.pass, r.notes);
            CHECK(r.residual < 1e-7);
        }
    }
    CHECK_THROWS(schottky_case("schottky.nope"));
}

TEST_CASE("J vanishes for the rank one group") {
    const auto& cx = testutil::context(4);
    auto c = schottky_case("schottky.F69");
    auto t = schottky_J(cx, c.P, c.A);
    CHECK(std::abs(t.J) < 1e-8 * t.scale);
}
