#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomae/curve.hpp"

using namespace thomae;

TEST_CASE("validate_curve sorts and rejects duplicates") {
    auto c = validate_curve(2, {1, 2, 3, 4, 5});
    CHECK(c.genus == 2);
    CHECK(c.at(1) == 1.0);
    CHECK(c.at(5) == 5.0);

    auto r = validate_curve(2, {5, 4, 3, 2, 1});
    for (int i = 1; i <= 5; ++i) CHECK(r.at(i) == double(i));

    CHECK_THROWS_WITH_AS(validate_curve(2, {1, 1, 3, 4, 5}), doctest::Contains("duplicate"), CurveError);
    CHECK_THROWS_AS(validate_curve(2, {1, 2, 3, 4}), CurveError);
}

TEST_CASE("vandermonde") {
    auto c = validate_curve(2, {1, 2, 3, 4, 5});
    CHECK(vandermonde(c, {1, 2, 3}) == doctest::Approx(2.0));
    CHECK(vandermonde(c, {1, 3, 5}) == doctest::Approx(16.0));
    CHECK(vandermonde(c, {4}) == 1.0);
    CHECK(vandermonde(c, {}) == 1.0);
}

TEST_CASE("elementary symmetric functions") {
    auto c = validate_curve(2, {1, 2, 3, 4, 5});
    CHECK(elementary_symmetric(c, {1, 2, 3}, 2) == doctest::Approx(11.0));
    CHECK(elementary_symmetric(c, {1, 2, 3}, 0) == 1.0);
    CHECK(elementary_symmetric(c, {1, 2}, 3) == 0.0);
    auto all = elementary_symmetric_all(c, {1, 2, 3});
    REQUIRE(all.size() == 4);
    CHECK(all[1] == doctest::Approx(6.0));
    CHECK(all[3] == doctest::Approx(6.0));
}

TEST_CASE("set helpers") {
    CHECK(set_union({1, 3}, {2, 3}) == IndexSet{1, 2, 3});
    CHECK(set_minus({1, 2, 3}, {2}) == IndexSet{1, 3});
    CHECK(set_intersect({1, 2, 3}, {2, 3, 4}) == IndexSet{2, 3});
    CHECK(set_xor({1, 2, 3}, {2, 3, 4}) == IndexSet{1, 4});
    CHECK(normalized({3, 1, 3}) == IndexSet{1, 3});
    CHECK(finite_complement(2, {0, 1, 4}) == IndexSet{2, 3, 5});
    CHECK(finite_part({0, 2}) == IndexSet{2});
    CHECK(replace({1, 2, 3}, {2}, {5}) == IndexSet{1, 3, 5});
    CHECK(contains({1, 4}, 4));
    CHECK_FALSE(contains({1, 4}, 0));
}

TEST_CASE("curve json round trip") {
    auto c = validate_curve(3, {-3.5, -1, 0.25, 1, 2, 4.5, 9}, "sample");
    auto back = curve_from_json(curve_to_json(c));
    CHECK(back.genus == 3);
    CHECK(back.e == c.e);
    CHECK(back.label == "sample");
}
