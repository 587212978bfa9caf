#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "degcenter/builtin_systems.hpp"
#include "degcenter/errors.hpp"
#include "degcenter/roots.hpp"

using namespace degcenter;
using doctest::Approx;

namespace {

AveragedPolynomial poly(double v6, double v4, double v2, double v0) {
    AveragedPolynomial p;
    p.v6 = v6;
    p.v4 = v4;
    p.v2 = v2;
    p.v0 = v0;
    return p;
}

}  // namespace

TEST_CASE("Descartes bound") {
    CHECK(descartes_bound(std::vector<double>{1, 1, 1, 1}) == 0);
    CHECK(descartes_bound(std::vector<double>{1, -1, 1, -1}) == 3);
    CHECK(descartes_bound(std::vector<double>{1}) == 0);
    CHECK(descartes_bound(std::vector<double>{}) == 0);
    CHECK(descartes_bound(std::vector<double>{1, 0, 0, -1}) == 1);
    CHECK(descartes_bound(std::vector<double>{-2, 0, 3, 0}) == 1);
}

TEST_CASE("roots of the reference polynomials") {
    auto r = positive_roots(poly(231.8725375, -993.0560642, 95.95703341, 665.2264933));
    REQUIRE(r.positive_roots.size() == 2);
    CHECK(std::abs(r.positive_roots[0].r0 - 1.0) < 1e-3);
    CHECK(std::abs(r.positive_roots[1].r0 - 2.0) < 1e-3);
    CHECK(r.predicted_cycles == 2);

    r = positive_roots(poly(-1.570796327, 21.62373221, -5545.821670, 6652.264933));
    REQUIRE(r.positive_roots.size() == 1);
    CHECK(std::abs(r.positive_roots[0].r0 - 1.097575824) < 1e-5);
    CHECK(r.discarded_complex_pairs == 2);
    CHECK(r.descartes_bound == 3);

    r = positive_roots(poly(3.141592654, 1.159249021, 95.95703341, 665.2264933));
    CHECK(r.positive_roots.empty());
    CHECK(r.descartes_bound == 0);
    CHECK(r.predicted_cycles == 0);
}

TEST_CASE("simple cases") {
    auto r = positive_roots(poly(1, 0, 0, -1));
    REQUIRE(r.positive_roots.size() == 1);
    CHECK(r.positive_roots[0].r0 == Approx(1.0).epsilon(1e-14));

    // Degree drops: no spurious roots at infinity.
    r = positive_roots(poly(0, 1, -5, 4));  // (s - 1)(s - 4)
    REQUIRE(r.positive_roots.size() == 2);
    CHECK(r.positive_roots[0].r0 == Approx(1.0).epsilon(1e-12));
    CHECK(r.positive_roots[1].r0 == Approx(2.0).epsilon(1e-12));
    r = positive_roots(poly(0, 0, 2, -8));
    REQUIRE(r.positive_roots.size() == 1);
    CHECK(r.positive_roots[0].r0 == Approx(2.0).epsilon(1e-12));
    r = positive_roots(poly(0, 0, 0, 5));
    CHECK(r.positive_roots.empty());
    CHECK(r.outcome == RootReport::Outcome::roots);

    // s = 0 is not a positive root.
    r = positive_roots(poly(1, -1, 0, 0));
    REQUIRE(r.positive_roots.size() == 1);
    CHECK(r.positive_roots[0].r0 == Approx(1.0).epsilon(1e-12));

    r = positive_roots(poly(0, 0, 0, 0));
    CHECK(r.outcome == RootReport::Outcome::identically_zero);
    CHECK(r.predicted_cycles == 0);
}

TEST_CASE("double roots are not counted") {
    // (s - 1)^2 (s - 4)
    const auto r = positive_roots(poly(1, -6, 9, -4));
    int simple = 0;
    for (const auto& root : r.positive_roots) simple += root.simple ? 1 : 0;
    CHECK(simple == 1);
    CHECK(r.predicted_cycles == 1);
}

TEST_CASE("random polynomials respect the Descartes bound") {
    std::mt19937_64 rng(30);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const auto p = poly(dist(rng), dist(rng), dist(rng), dist(rng));
        const auto r = positive_roots(p);
        CHECK(static_cast<int>(r.positive_roots.size()) <= r.descartes_bound);
        CHECK(r.predicted_cycles <= 3);
        const double scale = p.scale();
        for (const auto& root : r.positive_roots) {
            const double s = root.r0 * root.r0;
            const double value = ((p.v6 * s + p.v4) * s + p.v2) * s + p.v0;
            CHECK(std::abs(value) < 1e-8 * scale);
        }
    }
}

TEST_CASE("prediction pipeline") {
    const auto r11 = limit_cycle_report(builtin_system(11).coefficients);
    CHECK(r11.first_order_vanishes);
    REQUIRE(r11.roots.predicted_cycles == 3);
    CHECK(std::abs(r11.roots.positive_roots[0].r0 - 0.5) < 1e-3);
    CHECK(std::abs(r11.roots.positive_roots[1].r0 - 1.0) < 1e-3);
    CHECK(std::abs(r11.roots.positive_roots[2].r0 - 1.5) < 1e-3);

    CHECK(limit_cycle_report(builtin_system(14).coefficients).roots.predicted_cycles == 0);

    const auto zero = limit_cycle_report({});
    CHECK(zero.roots.outcome == RootReport::Outcome::identically_zero);

    // First-order case: G10 = alpha/r0 + beta r0 with alpha < 0 < beta has one root.
    PerturbationCoefficients c;
    c.set("c01", -1.0).set("c03", 1.0);
    const auto first = limit_cycle_report(c);
    CHECK(!first.first_order_vanishes);
    CHECK(first.roots.order == RootReport::Order::first);
    REQUIRE(first.roots.predicted_cycles == 1);
    CHECK(first.roots.positive_roots[0].r0 == Approx(std::sqrt(20.46448319 / std::numbers::pi)).epsilon(1e-8));
}
