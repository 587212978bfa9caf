#pragma once

#include <complex>
#include <string>
#include <vector>

#include "degcenter/vectorfield.hpp"

namespace degcenter {

/// Reference data for one of the four built-in perturbations (ids 11-14).
struct BuiltinSystem {
    int id = 0;
    PerturbationCoefficients coefficients;  ///< perturbation form; a10 of system 13 is the exact first-order value
    double v6 = 0.0, v4 = 0.0, v2 = 0.0, v0 = 0.0;
    int expected_cycles = 0;
    std::vector<double> positive_roots;
    double root_tolerance = 0.0;
    /// Remaining zeros in r0 as listed (empty when none were listed).
    std::vector<std::complex<double>> other_roots;
    double scan_min = 0.0, scan_max = 0.0;  ///< verification range for the return map

    /// Listed epsilon-expanded coefficient of one monomial at epsilon = 0.001:
    /// eps * (first-order) + eps^2 * (second-order).
    struct ExpandedTerm {
        char component;  ///< 'x' or 'y'
        int i, j;
        double value;
    };
    std::vector<ExpandedTerm> expanded;
};

inline constexpr double kBuiltinEpsilon = 1e-3;

const std::vector<BuiltinSystem>& builtin_systems();
/// Throws DomainError for an unknown id.
const BuiltinSystem& builtin_system(int id);

/// One reference entry of the v-slot coefficient table.
struct ReferenceTableEntry {
    std::string label;
    int slot;
    double value;
};

const std::vector<ReferenceTableEntry>& reference_table();

/// Reference center integrals and first-order ratio.
inline constexpr double kReferenceI1 = 3.572403292;
inline constexpr double kReferenceI2 = 5.985557563;
inline constexpr double kReferenceI3 = 21.62373221;
inline constexpr double kReferenceFirstOrderRatio = 17.65322447;

}  // namespace degcenter
