#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "degcenter/vectorfield.hpp"

namespace degcenter {

inline constexpr double kDefaultOdeTolerance = 1e-10;
inline constexpr double kDefaultEpsilon = 1e-3;
inline constexpr double kLocalToleranceFactor = 0.1;

/// One revolution of dr/dtheta from theta = 0 to 2pi.
struct ReturnMapResult {
    double r0 = 0.0;
    double p_of_r0 = 0.0;
    double displacement = 0.0;  ///< p_of_r0 - r0
    double epsilon = 0.0;
    double integrator_tolerance = 0.0;
    std::size_t steps = 0;
};

/// Integrates the untruncated dr/dtheta with an adaptive Dormand-Prince 5(4) pair
/// (absolute and relative local tolerance kLocalToleranceFactor * tol, so that
/// p(r0) is accurate to about `tol`). Throws SectionLostError when theta'
/// turns non-positive and StiffnessError when the integrator cannot progress.
ReturnMapResult return_map(const PerturbationCoefficients& coeffs, double epsilon, double r0,
                           double tol = kDefaultOdeTolerance);

struct DisplacementSample {
    double r0 = 0.0;
    double displacement = 0.0;
};

struct ScanOptions {
    double ode_tol = kDefaultOdeTolerance;
    double bracket_width = 1e-8;  ///< bisection stops below this width
    std::size_t grid_points = 64;
};

struct FixedPointScan {
    enum class Outcome { fixed_points, identically_zero };
    Outcome outcome = Outcome::fixed_points;
    std::vector<double> points;               ///< ascending
    std::vector<DisplacementSample> samples;  ///< the uniform scan
};

/// Scans the displacement on a uniform grid over [r_min, r_max], brackets sign
/// changes and bisects each one.
FixedPointScan fixed_points(const PerturbationCoefficients& coeffs, double epsilon, double r_min, double r_max,
                            const ScanOptions& options = {});

struct ConvergenceRow {
    double epsilon = 0.0;
    std::optional<double> nearest;  ///< nearest fixed point, if one was found
    std::optional<double> gap;      ///< |nearest - r_star|
};

struct ConvergenceStudy {
    enum class Outcome { rows, identically_zero };
    Outcome outcome = Outcome::rows;
    double r_star = 0.0;
    std::vector<ConvergenceRow> rows;
    /// Gaps never grow by more than the noise floor as epsilon decreases.
    bool monotone = false;
};

/// Fixed points near `r_star` (within a relative window) for each epsilon in
/// descending order.
ConvergenceStudy convergence_study(const PerturbationCoefficients& coeffs, std::span<const double> epsilons,
                                   double r_star, const ScanOptions& options = {}, double window = 0.25);

struct OrbitTrace {
    std::vector<double> times;
    std::vector<PlanarPoint> points;  ///< last entry is the exact end of the final revolution
    double epsilon = 0.0;
    PlanarPoint start;
};

/// Cartesian integration of the perturbed system for `revolutions` turns of the
/// polar angle, sampled at >= 256 points per revolution.
OrbitTrace orbit_trace(const PerturbationCoefficients& coeffs, double epsilon, PlanarPoint start, int revolutions,
                       double tol = kDefaultOdeTolerance);

/// displacement / (eps^2 G20(r0)); tends to a constant as eps -> 0 when G10 vanishes.
double displacement_ratio(const PerturbationCoefficients& coeffs, double epsilon, double r0, double g20,
                          double tol = kDefaultOdeTolerance);

void write_displacement_csv(std::ostream& out, std::span<const DisplacementSample> samples);
void write_orbit_csv(std::ostream& out, const OrbitTrace& trace);

}  // namespace degcenter
