#include "degcenter/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "degcenter/errors.hpp"

namespace degcenter {

namespace {

constexpr std::size_t kMinPeriodNodes = 16;
constexpr std::size_t kMaxPeriodNodes = std::size_t{1} << 20;
constexpr int kMaxDepth = 40;

bool accepted(double change, double value, double tol) { return std::abs(change) <= tol * std::max(1.0, std::abs(value)); }

const GaussRule& rule10() {
    static const GaussRule rule = gauss_legendre(10);
    return rule;
}

double gauss_panel(const ScalarFunction& f, double a, double b) {
    const GaussRule& g = rule10();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double terms[10];
    for (std::size_t k = 0; k < 10; ++k) terms[k] = g.weights[k] * f(mid + half * g.nodes[k]);
    return half * pairwise_sum(terms);
}

struct AdaptiveState {
    std::size_t evaluations = 0;
    bool failed = false;
};

double adaptive(const ScalarFunction& f, double a, double b, double whole, double tol, int depth, AdaptiveState& st) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    st.evaluations += 20;
    const double refined = left + right;
    if (accepted(refined - whole, refined, tol)) return refined;
    if (depth >= kMaxDepth || mid <= a || mid >= b) {
        st.failed = true;
        return refined;
    }
    return adaptive(f, a, mid, left, 0.5 * tol, depth + 1, st) + adaptive(f, mid, b, right, 0.5 * tol, depth + 1, st);
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / static_cast<double>(k);
            }
            dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double pairwise_sum(std::span<const double> terms) {
    if (terms.size() <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

QuadratureResult integrate_period(const ScalarFunction& f, double tol) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> values(kMinPeriodNodes);
    for (std::size_t k = 0; k < kMinPeriodNodes; ++k) values[k] = f(two_pi * static_cast<double>(k) / kMinPeriodNodes);
    std::size_t n = kMinPeriodNodes;
    double estimate = two_pi / static_cast<double>(n) * pairwise_sum(values);

    std::vector<double> fresh;
    while (n < kMaxPeriodNodes) {
        fresh.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            fresh[k] = f(two_pi * (2.0 * static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(n)));
        }
        const double refined = 0.5 * estimate + two_pi / (2.0 * static_cast<double>(n)) * pairwise_sum(fresh);
        n *= 2;
        const double change = refined - estimate;
        estimate = refined;
        if (accepted(change, refined, tol)) return {refined, std::abs(change), n};
    }
    throw AccuracyError("periodic trapezoidal rule did not converge with " + std::to_string(n) + " nodes", estimate);
}

QuadratureResult integrate_interval(const ScalarFunction& f, double a, double b, double tol) {
    if (a == b) return {0.0, 0.0, 0};
    AdaptiveState st;
    const double whole = gauss_panel(f, a, b);
    st.evaluations = 10;
    const double value = adaptive(f, a, b, whole, tol, 0, st);
    if (st.failed) {
        std::ostringstream msg;
        msg << "adaptive Gauss-Legendre did not converge on [" << a << ", " << b << "]";
        throw AccuracyError(msg.str(), value);
    }
    return {value, std::abs(value - whole), st.evaluations};
}

std::vector<double> cumulative_integral(const ScalarFunction& f, std::span<const double> grid, double tol) {
    std::vector<double> out(grid.size(), 0.0);
    if (grid.empty()) return out;
    if (grid.front() != 0.0) throw DomainError("cumulative_integral: grid must start at 0");
    double running = 0.0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double a = grid[k - 1];
        const double b = grid[k];
        if (b < a) throw DomainError("cumulative_integral: grid must be ascending");
        if (b > a) {
            AdaptiveState st;
            const double whole = gauss_panel(f, a, b);
            const double piece = adaptive(f, a, b, whole, tol, 0, st);
            if (st.failed) {
                std::ostringstream msg;
                msg << "cumulative_integral: panel " << k << " [" << a << ", " << b << "] did not converge";
                throw AccuracyError(msg.str(), running + piece);
            }
            running += piece;
        }
        out[k] = running;
    }
    return out;
}

}  // namespace degcenter
