#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <boost/math/special_functions/binomial.hpp>

#include "thomae/characteristics.hpp"

using namespace thomae;

namespace {
int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    return static_cast<int>(boost::math::binomial_coefficient<double>(n, k) + 0.5);
}
}  // namespace

TEST_CASE("branch point characteristics") {
    CHECK(branch_char(2, 1) == parse_char("[10/00]"));
    CHECK(branch_char(2, 5) == parse_char("[00/11]"));
    CHECK(branch_char(3, 4) == parse_char("[010/110]"));
}

TEST_CASE("Riemann constant") {
    CHECK(riemann_char(1) == parse_char("[1/1]"));
    CHECK(riemann_char(2) == parse_char("[11/01]"));
    CHECK(riemann_char(3) == parse_char("[111/101]"));
}

TEST_CASE("characteristic sums") {
    auto a = parse_char("[10/00]");
    HalfChar zero{2, 0, 0};
    CHECK(char_sum(a, a) == zero);
    CHECK(char_sum(a, zero) == a);
    CHECK(char_sum(a, parse_char("[11/01]")) == parse_char("[01/01]"));
}

TEST_CASE("partition characteristics") {
    CHECK(partition_char(Partition::of(2, {})) == riemann_char(2));
    auto p12 = partition_char(Partition::of(2, {1, 2}));
    CHECK(p12 == char_sum(char_sum(branch_char(2, 1), branch_char(2, 2)), riemann_char(2)));
    CHECK(p12 == parse_char("[11/11]"));
    CHECK(parity(p12) == Parity::even);
    CHECK(partition_char(Partition::of(3, {1})) == parse_char("[011/101]"));
}

TEST_CASE("multiplicity and parity") {
    CHECK(multiplicity(Partition::of(3, {})) == 2);
    CHECK(multiplicity(Partition::of(2, {1, 2})) == 0);
    CHECK(multiplicity(Partition::of(5, {})) == 3);
    CHECK(is_odd(parse_char("[11/01]")));
    CHECK(parity(HalfChar{3, 0, 0}) == Parity::even);
    CHECK(parity(parse_char("[111/101]")) == Parity::even);
}

TEST_CASE("partition counts") {
    CHECK(enumerate_partitions(2, 0).size() == 10);
    CHECK(enumerate_partitions(2, 1).size() == 6);
    CHECK(enumerate_partitions(4, 2).size() == 10);
    for (int g = 2; g <= 5; ++g) {
        CAPTURE(g);
        int total = 0, even = 0;
        for (int m = 0; 2 * m <= g + 1; ++m) {
            int expect = m == 0 ? binom(2 * g + 1, g) : binom(2 * g + 2, g + 1 - 2 * m);
            auto parts = enumerate_partitions(g, m);
            CHECK(static_cast<int>(parts.size()) == expect);
            total += expect;
            for (auto& p : parts) {
                CHECK(multiplicity(p) == m);
                // parity follows multiplicity
                CHECK(is_odd(partition_char(p)) == (m % 2 == 1));
                if (m % 2 == 0) ++even;
            }
        }
        CHECK(total == (1 << (2 * g)));
        CHECK(even == (1 << (g - 1)) * ((1 << g) + 1));
    }
}

TEST_CASE("partition dictionary is a bijection") {
    for (int g = 2; g <= 5; ++g) {
        std::set<std::uint32_t> seen;
        for (std::uint32_t key = 0; key < (1u << (2 * g)); ++key) {
            auto c = HalfChar::from_key(g, key);
            auto p = char_to_partition(g, c);
            CHECK(partition_char(p) == c);
            seen.insert(partition_char(p).key());
        }
        CHECK(seen.size() == (1u << (2 * g)));
    }
    // {} at g = 2 carries infinity explicitly
    CHECK(char_to_partition(2, parse_char("[11/01]")).part == IndexSet{0});
    CHECK(char_to_partition(2, parse_char("[11/01]")).finite().empty());
    CHECK(char_to_partition(2, parse_char("[01/01]")).part == IndexSet{1});
}

TEST_CASE("set order puts infinity first, then compares maxima") {
    CHECK(set_order_less({0, 1, 2}, {1, 2, 3}));
    CHECK(set_order_less({2, 3}, {1, 4}));
    CHECK_FALSE(set_order_less({1, 4}, {1, 4}));
}

TEST_CASE("char string round trip") {
    auto c = parse_char("[0110/1011]");
    CHECK(char_str(c) == "[0110/1011]");
    CHECK_THROWS(parse_char("0110/1011"));
}
