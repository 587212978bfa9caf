#pragma once

#include <complex>
#include <optional>
#include <cstddef>
#include <span>
#include <vector>

#include "degcenter/averaging.hpp"
#include "degcenter/vectorfield.hpp"

namespace degcenter {

inline constexpr double kDefaultRootTolerance = 1e-9;

/// Number of sign variations in `coefficients` (ascending order). Zero entries are skipped.
int descartes_bound(std::span<const double> coefficients);

struct PositiveRoot {
    double r0 = 0.0;
    double derivative = 0.0;  ///< dp/ds of the normalized cubic at s = r0^2
    bool simple = false;
};

/// Positive zeros of an averaged function and the resulting limit-cycle prediction.
struct RootReport {
    enum class Outcome { roots, identically_zero };
    enum class Order { first = 1, second = 2 };

    Outcome outcome = Outcome::roots;
    Order order = Order::second;
    int descartes_bound = 0;
    std::vector<PositiveRoot> positive_roots;  ///< ascending in r0
    int predicted_cycles = 0;                  ///< number of simple positive roots
    /// All zeros in the r0 variable, including negative and complex ones.
    std::vector<std::complex<double>> all_roots;
    int discarded_complex_pairs = 0;  ///< conjugate pairs of non-real r0 zeros
};

/// Zeros of r0^5 G20 via the cubic v6 s^3 + v4 s^2 + v2 s + v0 in s = r0^2.
/// Tolerances are relative to scale = max |v|. An all-zero polynomial yields
/// Outcome::identically_zero.
RootReport positive_roots(const AveragedPolynomial& poly, double tol = kDefaultRootTolerance);

/// Full prediction pipeline: first-order average, and when it vanishes identically
/// the second-order v-polynomial and its positive roots.
struct LimitCycleReport {
    FirstOrderAverage first_order;
    bool first_order_vanishes = false;
    std::optional<AveragedPolynomial> polynomial;  ///< set when the second order was used
    RootReport roots;
};

LimitCycleReport limit_cycle_report(const PerturbationCoefficients& coeffs, double tol = kDefaultTolerance,
                                    double root_tol = kDefaultRootTolerance);

}  // namespace degcenter
