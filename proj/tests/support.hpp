#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "degcenter/averaging.hpp"
#include "degcenter/vectorfield.hpp"

namespace degcenter::testing {

inline double rel_gap(double computed, double expected) {
    return std::abs(computed - expected) / std::max(1e-300, std::abs(expected));
}

/// Uniform [-1, 1] entries in the selected families.
inline PerturbationCoefficients random_coefficients(std::mt19937_64& rng, bool first = true, bool second = true) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    PerturbationCoefficients c;
    for (Family f : kFamilies) {
        const bool is_first = f == Family::a || f == Family::c;
        if ((is_first && !first) || (!is_first && !second)) continue;
        for (std::size_t s = 0; s < kMonomialCount; ++s) c.set(CoefficientKey{f, s}, dist(rng));
    }
    return c;
}

/// Random coefficients with the first-order condition imposed.
inline PerturbationCoefficients random_admissible(std::mt19937_64& rng, bool second = true) {
    return solve_first_order_condition(random_coefficients(rng, true, second));
}

}  // namespace degcenter::testing
