#pragma once

#include <array>
#include <span>
#include <vector>

#include "degcenter/vectorfield.hpp"

namespace degcenter {

/// Values of the epsilon-series terms of dr/dtheta = G0 + eps G1 + eps^2 G2 + O(eps^3)
/// at one point (theta, r).
struct EpsilonExpansion {
    double g0 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};

/// Finite Laurent polynomial in r at a fixed angle: sum_k coefficients[k] * r^(min_exponent + k).
struct RadialLaurent {
    int min_exponent = 0;
    std::vector<double> coefficients;

    int max_exponent() const { return min_exponent + static_cast<int>(coefficients.size()) - 1; }
    double coefficient(int exponent) const;
    double operator()(double r) const;
    double derivative(double r) const;
};

/// Probe radii for the Laurent fits. Both generalized Vandermonde systems are
/// factored once.
inline constexpr std::array<double, 4> kG1ProbeRadii = {0.5, 1.0, 1.5, 2.0};
inline constexpr std::array<double, 7> kG2ProbeRadii = {0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5};

/// Series division of r' = N0 + eps N1 + eps^2 N2 by theta' = D0 + eps D1 + eps^2 D2:
///   G0 = N0/D0, G1 = (N1 - G0 D1)/D0, G2 = (N2 - G1 D1 - G0 D2)/D0.
/// Throws DomainError for r <= 0.
EpsilonExpansion polar_rhs_series(const PerturbationCoefficients& coeffs, double theta, double r);

/// Coefficients of r^-2 .. r^1 of G1(theta, .).
RadialLaurent laurent_G1(const PerturbationCoefficients& coeffs, double theta);

/// Coefficients of r^-5 .. r^1 of G2(theta, .).
RadialLaurent laurent_G2(const PerturbationCoefficients& coeffs, double theta);

/// Least-squares Laurent fit of G1(theta, .) over exponents [min_exponent, max_exponent]
/// sampled at `radii`. Used to probe that the exponent range is complete.
RadialLaurent fit_G1_laurent(const PerturbationCoefficients& coeffs, double theta, int min_exponent,
                             int max_exponent, std::span<const double> radii);

/// dG1/dr from the Laurent form of G1. Throws DomainError for r <= 0.
double dG1_dr(const PerturbationCoefficients& coeffs, double theta, double r);

/// Untruncated dr/dtheta = r'/theta' at the given epsilon. Throws SectionLostError
/// when theta' <= 0 and DomainError for r <= 0.
double full_rhs(const PerturbationCoefficients& coeffs, double epsilon, double theta, double r);

}  // namespace degcenter
