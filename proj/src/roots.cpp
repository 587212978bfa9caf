#include "degcenter/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "degcenter/errors.hpp"

namespace degcenter {

namespace {

/// Simple zeros of an averaged function persist as limit cycles; the count can never exceed three.
constexpr int kMaxCycles = 3;

double horner(std::span<const double> ascending, double s) {
    double acc = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * s + *it;
    return acc;
}

double horner_derivative(std::span<const double> ascending, double s) {
    double acc = 0.0;
    for (std::size_t k = ascending.size(); k-- > 1;) acc = acc * s + static_cast<double>(k) * ascending[k];
    return acc;
}

/// Complex zeros of the polynomial with ascending coefficients (leading one nonzero).
std::vector<std::complex<double>> companion_roots(std::span<const double> ascending) {
    const auto degree = static_cast<Eigen::Index>(ascending.size()) - 1;
    if (degree < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    const double lead = ascending.back();
    for (Eigen::Index k = 0; k < degree; ++k) {
        companion(0, k) = -ascending[static_cast<std::size_t>(degree - 1 - k)] / lead;
        if (k + 1 < degree) companion(k + 1, k) = 1.0;
    }
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const Eigen::VectorXcd ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

int descartes_bound(std::span<const double> coefficients) {
    int changes = 0;
    double previous = 0.0;
    for (double c : coefficients) {
        if (c == 0.0) continue;
        if (previous != 0.0 && (previous < 0.0) != (c < 0.0)) ++changes;
        previous = c;
    }
    return changes;
}

RootReport positive_roots(const AveragedPolynomial& poly, double tol) {
    RootReport report;
    report.order = RootReport::Order::second;
    const double scale = poly.scale();
    if (scale == 0.0) {
        report.outcome = RootReport::Outcome::identically_zero;
        return report;
    }

    // Normalize so every tolerance below is relative to the largest coefficient,
    // and drop slots that are zero up to that tolerance.
    std::vector<double> p;
    for (double v : poly.ascending()) p.push_back(std::abs(v) <= tol * scale ? 0.0 : v / scale);
    report.descartes_bound = descartes_bound(p);
    while (!p.empty() && p.back() == 0.0) p.pop_back();

    // Zeros at s = 0 are not positive; factor them out.
    std::size_t zero_multiplicity = 0;
    while (!p.empty() && p.front() == 0.0) {
        p.erase(p.begin());
        ++zero_multiplicity;
    }
    for (std::size_t k = 0; k < 2 * zero_multiplicity; ++k) report.all_roots.emplace_back(0.0, 0.0);

    for (const std::complex<double>& s : companion_roots(p)) {
        const std::complex<double> r = std::sqrt(s);
        report.all_roots.push_back(r);
        report.all_roots.push_back(-r);
        const bool real = std::abs(s.imag()) <= tol * std::max(1.0, std::abs(s));
        if (!real) {
            ++report.discarded_complex_pairs;  // +-sqrt(s), conjugate to the partner's
            continue;
        }
        if (s.real() < 0.0) {
            ++report.discarded_complex_pairs;  // +-i sqrt(|s|)
            continue;
        }
        if (s.real() <= 1e-12) continue;

        // Polish on the real polynomial.
        double x = s.real();
        for (int it = 0; it < 3; ++it) {
            const double d = horner_derivative(p, x);
            if (d == 0.0) break;
            const double step = horner(p, x) / d;
            if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::max(1.0, x)) break;
            x -= step;
        }
        PositiveRoot root;
        root.r0 = std::sqrt(x);
        root.derivative = horner_derivative(p, x);
        root.simple = std::abs(root.derivative) > 1e-6;
        report.positive_roots.push_back(root);
    }
    std::sort(report.positive_roots.begin(), report.positive_roots.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) { return a.r0 < b.r0; });
    report.predicted_cycles = static_cast<int>(
        std::count_if(report.positive_roots.begin(), report.positive_roots.end(), [](const PositiveRoot& r) {
            return r.simple;
        }));
    if (report.predicted_cycles > kMaxCycles ||
        static_cast<int>(report.positive_roots.size()) > report.descartes_bound) {
        throw StructureError("root count exceeds the Descartes bound");
    }
    return report;
}

LimitCycleReport limit_cycle_report(const PerturbationCoefficients& coeffs, double tol, double root_tol) {
    LimitCycleReport out;
    out.first_order = first_order_structure(coeffs, tol);
    out.first_order_vanishes = first_order_vanishes(out.first_order, coeffs);

    if (!out.first_order_vanishes) {
        RootReport& r = out.roots;
        r.order = RootReport::Order::first;
        const std::array<double, 2> ascending = {out.first_order.alpha, out.first_order.beta};
        r.descartes_bound = descartes_bound(ascending);
        const FirstOrderRoot root = first_order_root(out.first_order);
        if (root.r0) {
            // r0 G10 = beta r0^2 + alpha, so d/ds at s = r0^2 is beta.
            r.positive_roots.push_back({*root.r0, out.first_order.beta, true});
            r.predicted_cycles = 1;
        }
        return out;
    }

    out.polynomial = fit_v_polynomial(coeffs, tol);
    out.roots = positive_roots(*out.polynomial, root_tol);
    return out;
}

}  // namespace degcenter
