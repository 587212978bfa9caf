#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "degcenter/errors.hpp"
#include "degcenter/quadrature.hpp"

using namespace degcenter;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {

double w(double t) { return std::exp(2.0 * std::sin(t) * std::sin(t)); }
double f1(double t) { return w(t) * std::pow(std::cos(t), 4); }
double f2(double t) { return w(t) * std::pow(std::cos(t), 2); }

double trapezoid(double (*f)(double), int n) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += f(2 * pi * k / n);
    return 2 * pi * s / n;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
    const auto rule = gauss_legendre(10);
    REQUIRE(rule.nodes.size() == 10);
    double wsum = 0.0;
    for (double x : rule.weights) wsum += x;
    CHECK(wsum == Approx(2.0).epsilon(1e-15));
    // Exact for x^18.
    double m = 0.0;
    for (std::size_t k = 0; k < 10; ++k) m += rule.weights[k] * std::pow(rule.nodes[k], 18);
    CHECK(m == Approx(2.0 / 19.0).epsilon(1e-14));
    for (std::size_t k = 1; k < 10; ++k) CHECK(rule.nodes[k - 1] < rule.nodes[k]);
}

TEST_CASE("pairwise sum") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("periodic integrals") {
    CHECK(std::abs(integrate_period([](double t) { return std::sin(t); }, 1e-12).value) < 1e-12);
    CHECK(integrate_period([](double) { return 1.0; }).value == Approx(2 * pi).epsilon(1e-15));
    CHECK(std::abs(integrate_period(f1).value - 3.572403292) < 1e-8);
    CHECK(std::abs(integrate_period(f2).value - 5.985557563) < 1e-8);
    CHECK(std::abs(integrate_period(w).value - 21.62373221) < 1e-8);
}

TEST_CASE("trapezoid converges spectrally on the center-integral integrands") {
    const double i1 = integrate_period(f1, 1e-14).value;
    const double i2 = integrate_period(f2, 1e-14).value;
    const double i3 = integrate_period(w, 1e-14).value;
    CHECK(std::abs(trapezoid(f1, 128) - i1) < 1e-10);
    CHECK(std::abs(trapezoid(f2, 128) - i2) < 1e-10);
    CHECK(std::abs(trapezoid(w, 128) - i3) < 1e-10);
}

TEST_CASE("non-convergence carries the best estimate") {
    // An algebraic singularity defeats the periodic rule.
    auto cusp = [](double t) { return std::pow(std::abs(t - 1.0), 0.1); };
    const double exact = (1.0 + std::pow(2 * pi - 1.0, 1.1)) / 1.1;
    try {
        integrate_period(cusp, 1e-14);
        FAIL("expected an accuracy error");
    } catch (const AccuracyError& e) {
        CHECK(e.best_estimate() == Approx(exact).epsilon(1e-4));
    }
}

TEST_CASE("interval integrals") {
    CHECK(integrate_interval([](double t) { return std::exp(t); }, 0.0, 1.0).value ==
          Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    CHECK(integrate_interval([](double t) { return std::sqrt(t); }, 0.0, 1.0, 1e-10).value ==
          Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(integrate_interval([](double) { return 3.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("cumulative integrals") {
    const std::vector<double> grid = {0.0, pi / 2, pi};
    const auto f = cumulative_integral([](double t) { return std::cos(t); }, grid);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 0.0);
    CHECK(std::abs(f[1] - 1.0) < 1e-10);
    CHECK(std::abs(f[2]) < 1e-10);

    for (double v : cumulative_integral([](double) { return 0.0; }, grid)) CHECK(v == 0.0);

    const std::vector<double> full = {0.0, 1.0, 2 * pi};
    CHECK(std::abs(cumulative_integral(f2, full).back() - 5.985557563) < 1e-8);

    CHECK_THROWS_AS(cumulative_integral(f2, std::vector<double>{0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(cumulative_integral(f2, std::vector<double>{0.0, 1.0, 0.5}), DomainError);
}

TEST_CASE("cumulative at 2pi agrees with the periodic rule") {
    const double tol = 1e-10;
    std::vector<double> grid;
    for (int k = 0; k <= 16; ++k) grid.push_back(2 * pi * k / 16);
    for (auto fn : {f1, f2, w}) {
        const double a = cumulative_integral(fn, grid, tol).back();
        const double b = integrate_period(fn, tol).value;
        CHECK(std::abs(a - b) <= 2 * tol * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("additivity of the cumulative integral") {
    const double tol = 1e-10;
    const std::vector<double> grid = {0.0, 0.3, 1.1, 2.0, 4.4, 6.0};
    const auto F = cumulative_integral(f1, grid, tol);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const double direct = integrate_interval(f1, grid[i], grid[j], tol).value;
            CHECK(std::abs((F[j] - F[i]) - direct) <= 2 * tol * std::max(1.0, std::abs(direct)));
        }
    }
}
