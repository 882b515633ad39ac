#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "common.hpp"

using namespace thomae;

namespace {
CMat itau(int g) { return CMat::Identity(g, g) * cplx(0, 1); }
}  // namespace

TEST_CASE("genus one theta at tau = i matches a direct sum") {
    ThetaEngine eng({itau(1), 1e-15});
    double ref = 0.0;
    for (int n = -100; n <= 100; ++n) ref += std::exp(-std::numbers::pi * n * n);
    CVec v = CVec::Zero(1);
    CHECK(std::abs(eng.theta_char(HalfChar{1, 0, 0}, v) - ref) < 1e-14);
    // [1/0]: sum over half-integer shifts
    double half = 0.0;
    for (int n = -100; n <= 100; ++n) half += std::exp(-std::numbers::pi * (n + 0.5) * (n + 0.5));
    CHECK(std::abs(eng.theta_char(HalfChar{1, 0, 1}, v) - half) < 1e-14);
}

TEST_CASE("odd characteristics vanish at zero") {
    const auto& cx = testutil::context(3);
    for (auto& p : enumerate_partitions(3, 1)) {
        auto t = cx.engine->theta_deriv(partition_char(p), 0);
        CHECK(std::abs(t.value()) < 1e-12 * t.scale);
    }
}

TEST_CASE("parity symmetry in v") {
    const auto& cx = testutil::context(2);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (std::uint32_t key = 0; key < 16; ++key) {
        auto c = HalfChar::from_key(2, key);
        double sgn = is_odd(c) ? -1.0 : 1.0;
        for (int t = 0; t < 5; ++t) {
            CVec v(2);
            v << cplx(u(rng), u(rng)), cplx(u(rng), u(rng));
            cplx a = cx.engine->theta_char(c, v), b = cx.engine->theta_char(c, -v);
            CHECK(std::abs(b - sgn * a) < 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("gradients of even nonsingular characteristics vanish") {
    const auto& cx = testutil::context(3);
    for (auto& p : enumerate_partitions(3, 0)) {
        auto t = cx.engine->theta_deriv(partition_char(p), 1);
        CHECK(t.max_abs() < 1e-10 * t.scale);
    }
}

TEST_CASE("vanishing order equals multiplicity") {
    for (int g = 2; g <= 4; ++g) {
        const auto& cx = testutil::context(g);
        for (int m = 1; 2 * m <= g + 1; ++m)
            for (auto& p : enumerate_partitions(g, m)) {
                CAPTURE(g);
                CAPTURE(m);
                auto ts = cx.engine->theta_derivs(partition_char(p), m);
                for (int k = 0; k < m; ++k) CHECK(ts[k].max_abs() < 1e-8 * ts[k].scale);
                CHECK(ts[m].max_abs() > 1e-6 * ts[m].scale);
            }
    }
}

TEST_CASE("derivative tensors are symmetric") {
    const auto& cx = testutil::context(3);
    auto t = cx.th().tensor({}, 2);
    auto h = cx.th().hess({});
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12 * t.scale);
    auto d3 = cx.th().tensor({1}, 3);
    CHECK(std::abs(d3.at({0, 1, 2}) - d3.at({2, 0, 1})) < 1e-12 * d3.scale);
}

TEST_CASE("truncation radius") {
    // radius lives in the metric pi Im tau; divide by sqrt(pi lambda_min) for lattice units
    double r14 = truncation_radius(itau(2), 1e-14);
    CHECK(r14 / std::sqrt(std::numbers::pi) <= 6.0);
    CHECK(truncation_radius(itau(2), 1e-4) < r14);
    CHECK(truncation_radius(itau(2), 1e-14, 2) >= r14);

    ThetaEngine eng({itau(2), 1e-14});
    auto base = eng.theta_derivs(HalfChar{2, 0, 0}, 0, 1.0);
    auto wide = eng.theta_derivs(HalfChar{2, 0, 0}, 0, 2.0);
    CHECK(std::abs(base[0].value() - wide[0].value()) < 1e-14);

    ThetaEngine loose({itau(2), 1e-4});
    CVec v(2);
    v << cplx(0.1, 0.05), cplx(-0.2, 0.1);
    cplx a = eng.theta_char(HalfChar{2, 0, 0}, v), b = loose.theta_char(HalfChar{2, 0, 0}, v);
    CHECK(std::abs(a - b) < 1e-4);

    // nearly singular imaginary part: lattice extent grows
    CMat thin = itau(2);
    thin(1, 1) = cplx(0, 0.01);
    double thin_extent = truncation_radius(thin, 1e-14) / std::sqrt(std::numbers::pi * 0.01);
    CHECK(thin_extent > 2 * r14 / std::sqrt(std::numbers::pi));
    CHECK_THROWS_AS(ThetaEngine({CMat::Identity(2, 2), 1e-12}), ThetaError);
}

TEST_CASE("table lookups agree with direct evaluation") {
    const auto& cx = testutil::context(2);
    auto c = set_char(2, {1, 2});
    auto direct = cx.engine->theta_deriv(c, 0).value();
    CHECK(std::abs(cx.th().theta({1, 2}) - direct) < 1e-14 * std::abs(direct));
}
