#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degcenter/quadrature.hpp"
#include "degcenter/vectorfield.hpp"

namespace degcenter {

/// I1 = int exp(2 sin^2) cos^4, I2 = int exp(2 sin^2) cos^2, I3 = int exp(2 sin^2), all over [0, 2pi].
struct CenterIntegrals {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;

    /// (I3 - 2 I1 + I2) / (2 I1 - I2); the first-order condition is a10 = -ratio * c01.
    double first_order_ratio() const { return (i3 - 2.0 * i1 + i2) / (2.0 * i1 - i2); }
};

CenterIntegrals center_integrals(double tol = kDefaultTolerance);

/// Center integrals at full double precision, computed once.
const CenterIntegrals& reference_center_integrals();

/// Unperturbed periodic solution r_s = r0 exp(-sin^2 theta).
double periodic_solution(double theta, double r0);
/// Solution of the variational equation, u = exp(-sin^2 theta).
double variational_solution(double theta);

/// G10(r0) = alpha / r0 + beta * r0.
struct FirstOrderAverage {
    double alpha = 0.0;
    double beta = 0.0;
    /// Largest |closed form - quadrature| seen in the cross-check.
    double quadrature_gap = 0.0;

    double operator()(double r0) const { return alpha / r0 + beta * r0; }
};

/// Relative threshold below which |alpha| + |beta| counts as an identically zero G10.
inline constexpr double kFirstOrderZeroTolerance = 1e-9;

/// True when G10 vanishes identically for these coefficients, relative to their scale.
bool first_order_vanishes(const FirstOrderAverage& avg, const PerturbationCoefficients& coeffs);

/// G10(r0) by quadrature of G1(theta, r_s)/u over one period.
double first_order_by_quadrature(const PerturbationCoefficients& coeffs, double r0, double tol = kDefaultTolerance);

/// Closed-form alpha, beta cross-checked against quadrature at two radii.
/// Throws ConsistencyError if the routes disagree by more than 1e-6 (relative to scale).
FirstOrderAverage first_order_structure(const PerturbationCoefficients& coeffs, double tol = kDefaultTolerance);

/// Overwrites a10 and a30 so that G10 vanishes identically; nothing else changes.
PerturbationCoefficients solve_first_order_condition(const PerturbationCoefficients& coeffs);
PerturbationCoefficients solve_first_order_condition(const PerturbationCoefficients& coeffs, const CenterIntegrals& integrals);

/// Samples of r_s, u and u1 on an angle grid for one r0.
struct PeriodicKernels {
    double r0 = 0.0;
    std::vector<double> theta_grid;
    std::vector<double> rs_values;
    std::vector<double> u_values;
    std::vector<double> u1_values;  ///< u1(theta) = int_0^theta G1(phi, r_s)/u dphi
};

/// `grid` must start at 0 and ascend.
PeriodicKernels periodic_kernels(const PerturbationCoefficients& coeffs, double r0, std::span<const double> grid,
                                 double tol = kDefaultTolerance);

enum class DerivativeMode { analytic, finite_difference };

struct SecondOrderValue {
    double value = 0.0;
    double error_estimate = 0.0;
    bool first_order_vanishes = false;
    std::size_t panels = 0;
};

/// G20(r0) = int_0^2pi [ G2(theta, r_s)/u + dG1/dr(theta, r_s) u1 ] dtheta.
/// The curvature term with d2G0/dr2 is absent because G0 is linear in r.
/// Composite Gauss-Legendre with panel doubling; u1 is evaluated at every
/// quadrature node through a cumulative integral.
SecondOrderValue compute_G20(const PerturbationCoefficients& coeffs, double r0, double tol = kDefaultTolerance,
                             DerivativeMode mode = DerivativeMode::analytic);

/// Sample radii for the v-polynomial fit. Eight radii so that the extended
/// seven-term fit with odd powers stays overdetermined.
inline constexpr std::array<double, 8> kFitRadii = {0.5, 0.6, 0.8, 1.0, 1.25, 1.6, 2.0, 2.5};

/// r0^5 G20(r0) = v6 r0^6 + v4 r0^4 + v2 r0^2 + v0.
struct AveragedPolynomial {
    double v6 = 0.0;
    double v4 = 0.0;
    double v2 = 0.0;
    double v0 = 0.0;
    double fit_residual = 0.0;           ///< max |sample - even fit|
    std::array<double, 3> odd_terms{};   ///< r0^5, r0^3, r0^1 coefficients of the extended fit

    double scale() const;
    bool is_zero() const { return v6 == 0.0 && v4 == 0.0 && v2 == 0.0 && v0 == 0.0; }
    /// (v0, v2, v4, v6): coefficients of s^0..s^3 with s = r0^2.
    std::array<double, 4> ascending() const { return {v0, v2, v4, v6}; }
    double g20(double r0) const;
};

/// Samples r0^5 G20 at kFitRadii and fits the even basis. Throws StructureError
/// when the residual or an odd coefficient exceeds 1e-6 * max(|v|, 1).
AveragedPolynomial fit_v_polynomial(const PerturbationCoefficients& coeffs, double tol = kDefaultTolerance);

/// Same fit from precomputed samples (radius, r0^5 G20), without the structure check.
AveragedPolynomial fit_v_samples(std::span<const double> radii, std::span<const double> scaled_samples);

/// Threshold used by fit_v_polynomial for the structure check.
inline constexpr double kStructureTolerance = 1e-6;

/// Numeric coefficients of the v-slots as polynomials in the perturbation
/// coefficients: bilinear in the free first-order coefficients (a10 and a30
/// are eliminated through solve_first_order_condition) and linear in the second-order ones.
class CoefficientTable {
public:
    struct Entry {
        std::string label;  ///< "a00*c00" (canonical order) or "b10"
        int slot = 0;       ///< 6, 4, 2 or 0
        double value = 0.0;
    };

    void add(std::string label, int slot, double value);

    /// Value for a monomial label, accepting either order of a pair. Unknown labels give 0.
    double value(std::string_view label, int slot) const;
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<Entry> entries_above(double threshold) const;

    static std::string canonical_label(std::string_view label);

private:
    std::vector<Entry> entries_;
};

/// Free first-order coefficients once the first-order condition fixes a10 and a30.
std::vector<CoefficientKey> free_first_order_keys();

CoefficientTable bilinear_table(double tol = kDefaultTolerance);

/// First-order limit-cycle prediction from alpha / r0 + beta r0.
struct FirstOrderRoot {
    enum class Outcome { root, none, identically_zero };
    Outcome outcome = Outcome::none;
    std::optional<double> r0;
};

FirstOrderRoot first_order_root(const FirstOrderAverage& avg);

}  // namespace degcenter
