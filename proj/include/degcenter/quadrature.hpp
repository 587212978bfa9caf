#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace degcenter {

using ScalarFunction = std::function<double(double)>;

inline constexpr double kDefaultTolerance = 1e-10;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< |difference| between the last two refinement levels
    std::size_t nodes_used = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t n);

/// Summation in a fixed binary-tree order, independent of how the terms were produced.
double pairwise_sum(std::span<const double> terms);

// Tolerances are mixed absolute/relative: a refinement is accepted once
// |change| <= tol * max(1, |value|).

/// Trapezoidal rule on [0, 2pi] with node doubling from 16 up to 2^20 nodes.
/// For smooth periodic f the rule converges spectrally. Throws AccuracyError
/// carrying the best estimate when 2^20 nodes are not enough.
QuadratureResult integrate_period(const ScalarFunction& f, double tol = kDefaultTolerance);

/// Adaptive 10-point Gauss-Legendre with bisection on [a, b].
QuadratureResult integrate_interval(const ScalarFunction& f, double a, double b, double tol = kDefaultTolerance);

/// F(grid[k]) = integral of f over [0, grid[k]]. `grid` must start at exactly 0
/// and be non-decreasing; F(0) = 0 exactly. Each panel is integrated adaptively
/// to `tol`; a panel that fails raises AccuracyError naming it.
std::vector<double> cumulative_integral(const ScalarFunction& f, std::span<const double> grid,
                                        double tol = kDefaultTolerance);

}  // namespace degcenter
