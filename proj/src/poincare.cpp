#include "degcenter/poincare.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <string>

#include "degcenter/averaging.hpp"
#include "degcenter/errors.hpp"
#include "degcenter/polar_series.hpp"

namespace degcenter {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxSteps = 2'000'000;
constexpr std::size_t kSamplesPerRevolution = 512;

using RadialState = std::array<double, 1>;
using PlaneState = std::array<double, 2>;

double angular_rate(const PerturbationCoefficients& coeffs, double epsilon, const PlaneState& p) {
    const Velocity v = eval_perturbed(coeffs, epsilon, {p[0], p[1]});
    return p[0] * v.dy - p[1] * v.dx;
}

double wrap_angle(double a) { return std::remainder(a, kTwoPi); }

}  // namespace

ReturnMapResult return_map(const PerturbationCoefficients& coeffs, double epsilon, double r0, double tol) {
    if (!(r0 > 0.0)) throw DomainError("return_map: r0 must be positive");
    // Local errors accumulate over the revolution; steps are controlled a decade
    // below the requested accuracy of p(r0).
    const double local = kLocalToleranceFactor * tol;
    auto stepper = odeint::make_controlled(local, local, odeint::runge_kutta_dopri5<RadialState>());
    RadialState state{r0};
    std::size_t steps = 0;
    const auto system = [&](const RadialState& r, RadialState& drdtheta, double theta) {
        if (!(r[0] > 0.0)) throw StiffnessError("return_map: orbit reached the origin");
        drdtheta[0] = full_rhs(coeffs, epsilon, theta, r[0]);
    };
    const auto observer = [&](const RadialState&, double) {
        if (++steps > kMaxSteps) throw StiffnessError("return_map: step limit exceeded");
    };
    try {
        odeint::integrate_adaptive(stepper, system, state, 0.0, kTwoPi, 1e-2, observer);
    } catch (const odeint::odeint_error& e) {
        throw StiffnessError(std::string("return_map: ") + e.what());
    }
    return {r0, state[0], state[0] - r0, epsilon, tol, steps};
}

FixedPointScan fixed_points(const PerturbationCoefficients& coeffs, double epsilon, double r_min, double r_max,
                            const ScanOptions& options) {
    if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("fixed_points: need 0 < r_min < r_max");
    FixedPointScan scan;
    if (epsilon == 0.0 || coeffs.is_zero()) {
        scan.outcome = FixedPointScan::Outcome::identically_zero;
        return scan;
    }
    const std::size_t n = std::max<std::size_t>(options.grid_points, 2);
    const auto displacement = [&](double r) { return return_map(coeffs, epsilon, r, options.ode_tol).displacement; };

    for (std::size_t k = 0; k < n; ++k) {
        const double r = r_min + (r_max - r_min) * static_cast<double>(k) / static_cast<double>(n - 1);
        scan.samples.push_back({r, displacement(r)});
    }
    for (std::size_t k = 0; k < n; ++k) {
        const DisplacementSample& lo = scan.samples[k];
        if (lo.displacement == 0.0) {
            scan.points.push_back(lo.r0);
            continue;
        }
        if (k + 1 == n) break;
        const DisplacementSample& hi = scan.samples[k + 1];
        if (hi.displacement == 0.0 || (lo.displacement < 0.0) == (hi.displacement < 0.0)) continue;
        double a = lo.r0;
        double b = hi.r0;
        const bool lo_negative = lo.displacement < 0.0;
        while (b - a > options.bracket_width) {
            const double mid = 0.5 * (a + b);
            const double d = displacement(mid);
            if (d == 0.0) {
                a = b = mid;
                break;
            }
            ((d < 0.0) == lo_negative ? a : b) = mid;
        }
        scan.points.push_back(0.5 * (a + b));
    }
    std::sort(scan.points.begin(), scan.points.end());
    return scan;
}

ConvergenceStudy convergence_study(const PerturbationCoefficients& coeffs, std::span<const double> epsilons,
                                   double r_star, const ScanOptions& options, double window) {
    ConvergenceStudy study;
    study.r_star = r_star;
    if (coeffs.is_zero()) {
        study.outcome = ConvergenceStudy::Outcome::identically_zero;
        return study;
    }
    for (double eps : epsilons) {
        ConvergenceRow row;
        row.epsilon = eps;
        const FixedPointScan scan = fixed_points(coeffs, eps, r_star * (1.0 - window), r_star * (1.0 + window), options);
        for (double p : scan.points) {
            if (!row.nearest || std::abs(p - r_star) < std::abs(*row.nearest - r_star)) row.nearest = p;
        }
        if (row.nearest) row.gap = std::abs(*row.nearest - r_star);
        study.rows.push_back(row);
    }
    const double noise = 10.0 * options.bracket_width;
    study.monotone = !study.rows.empty();
    for (std::size_t k = 0; k < study.rows.size(); ++k) {
        if (!study.rows[k].gap) {
            study.monotone = false;
            continue;
        }
        if (k > 0 && study.rows[k - 1].gap && *study.rows[k].gap > *study.rows[k - 1].gap + noise) {
            study.monotone = false;
        }
    }
    return study;
}

OrbitTrace orbit_trace(const PerturbationCoefficients& coeffs, double epsilon, PlanarPoint start, int revolutions,
                       double tol) {
    if (start.x == 0.0 && start.y == 0.0) throw DomainError("orbit_trace: start must differ from the origin");
    if (revolutions < 1) throw DomainError("orbit_trace: revolutions must be positive");

    OrbitTrace trace;
    trace.epsilon = epsilon;
    trace.start = start;

    const double r2 = start.x * start.x + start.y * start.y;
    // Unperturbed period at this radius is I3 / r^2.
    const double period = reference_center_integrals().i3 / r2;
    const double dt = period / static_cast<double>(kSamplesPerRevolution);
    const double angle0 = std::atan2(start.y, start.x);
    const double target = angle0 + kTwoPi * revolutions;

    const auto system = [&](const PlaneState& p, PlaneState& dpdt, double) {
        const Velocity v = eval_perturbed(coeffs, epsilon, {p[0], p[1]});
        dpdt = {v.dx, v.dy};
    };
    // Absolute tolerance scaled by the starting radius so small orbits get the same relative accuracy.
    auto stepper = odeint::make_dense_output(tol * std::sqrt(r2), tol, odeint::runge_kutta_dopri5<PlaneState>());
    stepper.initialize(PlaneState{start.x, start.y}, 0.0, 0.25 * dt);

    trace.times.push_back(0.0);
    trace.points.push_back(start);
    double angle = angle0;
    std::size_t next_sample = 1;
    std::size_t steps = 0;

    const auto unwrapped_at = [&](double t, double reference) {
        PlaneState p;
        stepper.calc_state(t, p);
        return reference + wrap_angle(std::atan2(p[1], p[0]) - wrap_angle(reference));
    };

    try {
        while (true) {
            if (++steps > kMaxSteps) throw StiffnessError("orbit_trace: step limit exceeded");
            const double angle_before = angle;
            const auto [t_prev, t_cur] = stepper.do_step(system);
            const PlaneState& cur = stepper.current_state();
            if (!(angular_rate(coeffs, epsilon, cur) > 0.0)) {
                throw SectionLostError("orbit_trace: angular velocity is not positive; reduce epsilon");
            }
            angle = angle_before + wrap_angle(std::atan2(cur[1], cur[0]) - std::atan2(std::sin(angle_before),
                                                                                          std::cos(angle_before)));
            double t_end = t_cur;
            const bool done = angle >= target;
            if (done) {
                // Bisection on the dense output for the crossing of the target angle.
                double a = t_prev;
                double b = t_cur;
                for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
                    const double mid = 0.5 * (a + b);
                    (unwrapped_at(mid, angle_before) < target ? a : b) = mid;
                }
                t_end = 0.5 * (a + b);
            }
            while (static_cast<double>(next_sample) * dt < t_end) {
                const double ts = static_cast<double>(next_sample) * dt;
                PlaneState p;
                stepper.calc_state(ts, p);
                trace.times.push_back(ts);
                trace.points.push_back({p[0], p[1]});
                ++next_sample;
            }
            if (done) {
                PlaneState p;
                stepper.calc_state(t_end, p);
                trace.times.push_back(t_end);
                trace.points.push_back({p[0], p[1]});
                break;
            }
        }
    } catch (const odeint::odeint_error& e) {
        throw StiffnessError(std::string("orbit_trace: ") + e.what());
    }
    return trace;
}

double displacement_ratio(const PerturbationCoefficients& coeffs, double epsilon, double r0, double g20, double tol) {
    return return_map(coeffs, epsilon, r0, tol).displacement / (epsilon * epsilon * g20);
}

void write_displacement_csv(std::ostream& out, std::span<const DisplacementSample> samples) {
    const auto old = out.precision(17);
    out << "r0,displacement\n";
    for (const DisplacementSample& s : samples) out << s.r0 << ',' << s.displacement << '\n';
    out.precision(old);
}

void write_orbit_csv(std::ostream& out, const OrbitTrace& trace) {
    const auto old = out.precision(17);
    out << "t,x,y\n";
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        out << trace.times[k] << ',' << trace.points[k].x << ',' << trace.points[k].y << '\n';
    }
    out.precision(old);
}

}  // namespace degcenter
