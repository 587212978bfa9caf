#include "degcenter/averaging.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "degcenter/errors.hpp"
#include "degcenter/polar_series.hpp"

namespace degcenter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kGaussOrder = 10;
constexpr std::size_t kFirstPanels = 16;
constexpr std::size_t kMaxPanels = 4096;
// Radii for the closed-form/quadrature cross-check of G10.
constexpr std::array<double, 2> kCrossCheckRadii = {0.7, 1.6};

double kernel_exponent(double theta) {
    const double s = std::sin(theta);
    return std::exp(-s * s);
}

/// Sorted nodes of composite Gauss-Legendre on `panels` equal panels of [0, 2pi],
/// with the matching weights.
void composite_rule(std::size_t panels, std::vector<double>& nodes, std::vector<double>& weights) {
    static const GaussRule rule = gauss_legendre(kGaussOrder);
    const double width = kTwoPi / static_cast<double>(panels);
    nodes.clear();
    weights.clear();
    nodes.reserve(panels * kGaussOrder);
    weights.reserve(panels * kGaussOrder);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = (static_cast<double>(p) + 0.5) * width;
        for (std::size_t k = 0; k < kGaussOrder; ++k) {
            nodes.push_back(mid + 0.5 * width * rule.nodes[k]);
            weights.push_back(0.5 * width * rule.weights[k]);
        }
    }
}

double second_order_sum(const PerturbationCoefficients& coeffs, double r0, std::size_t panels, double tol,
                        DerivativeMode mode) {
    std::vector<double> nodes;
    std::vector<double> weights;
    composite_rule(panels, nodes, weights);

    std::vector<double> grid;
    grid.reserve(nodes.size() + 1);
    grid.push_back(0.0);
    grid.insert(grid.end(), nodes.begin(), nodes.end());
    const PeriodicKernels kernels = periodic_kernels(coeffs, r0, grid, tol);

    std::vector<double> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double theta = nodes[k];
        const double rs = kernels.rs_values[k + 1];
        const double u = kernels.u_values[k + 1];
        const double u1 = kernels.u1_values[k + 1];
        const double g2 = polar_rhs_series(coeffs, theta, rs).g2;
        double dg1 = 0.0;
        if (u1 != 0.0) {
            if (mode == DerivativeMode::analytic) {
                dg1 = dG1_dr(coeffs, theta, rs);
            } else {
                const double h = 1e-5 * rs;
                dg1 = (polar_rhs_series(coeffs, theta, rs + h).g1 - polar_rhs_series(coeffs, theta, rs - h).g1) /
                      (2.0 * h);
            }
        }
        terms[k] = weights[k] * (g2 / u + dg1 * u1);
    }
    return pairwise_sum(terms);
}

FirstOrderAverage closed_form_first_order(const PerturbationCoefficients& coeffs) {
    const CenterIntegrals& ci = reference_center_integrals();
    const double a10 = coeffs.get(Family::a, 1, 0);
    const double a30 = coeffs.get(Family::a, 3, 0);
    const double c01 = coeffs.get(Family::c, 0, 1);
    const double c03 = coeffs.get(Family::c, 0, 3);
    const double c21 = coeffs.get(Family::c, 2, 1);

    FirstOrderAverage avg;
    avg.alpha = (2.0 * a10 - 2.0 * c01) * ci.i1 + (c01 - a10) * ci.i2 + c01 * ci.i3;
    avg.beta = 0.5 * std::numbers::pi * (2.0 * c03 + a30 + c21);
    return avg;
}

}  // namespace

CenterIntegrals center_integrals(double tol) {
    const auto weight = [](double theta) {
        const double s = std::sin(theta);
        return std::exp(2.0 * s * s);
    };
    CenterIntegrals ci;
    ci.i1 = integrate_period(
                [&](double t) {
                    const double c = std::cos(t);
                    return weight(t) * c * c * c * c;
                },
                tol)
                .value;
    ci.i2 = integrate_period(
                [&](double t) {
                    const double c = std::cos(t);
                    return weight(t) * c * c;
                },
                tol)
                .value;
    ci.i3 = integrate_period(weight, tol).value;
    return ci;
}

const CenterIntegrals& reference_center_integrals() {
    static const CenterIntegrals ci = center_integrals(1e-15);
    return ci;
}

double periodic_solution(double theta, double r0) { return r0 * kernel_exponent(theta); }

double variational_solution(double theta) { return kernel_exponent(theta); }

bool first_order_vanishes(const FirstOrderAverage& avg, const PerturbationCoefficients& coeffs) {
    return std::abs(avg.alpha) + std::abs(avg.beta) <=
           kFirstOrderZeroTolerance * std::max(1.0, coeffs.first_order_scale());
}

double first_order_by_quadrature(const PerturbationCoefficients& coeffs, double r0, double tol) {
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    return integrate_period(
               [&](double theta) {
                   return polar_rhs_series(coeffs, theta, periodic_solution(theta, r0)).g1 /
                          variational_solution(theta);
               },
               tol)
        .value;
}

FirstOrderAverage first_order_structure(const PerturbationCoefficients& coeffs, double tol) {
    FirstOrderAverage avg = closed_form_first_order(coeffs);
    const double scale = std::max(1.0, coeffs.first_order_scale());
    for (double r0 : kCrossCheckRadii) {
        const double gap = std::abs(first_order_by_quadrature(coeffs, r0, tol) - avg(r0));
        avg.quadrature_gap = std::max(avg.quadrature_gap, gap);
    }
    if (avg.quadrature_gap > 1e-6 * scale) {
        std::ostringstream msg;
        msg << "first-order average: closed form and quadrature differ by " << avg.quadrature_gap;
        throw ConsistencyError(msg.str());
    }
    return avg;
}

PerturbationCoefficients solve_first_order_condition(const PerturbationCoefficients& coeffs) {
    return solve_first_order_condition(coeffs, reference_center_integrals());
}

PerturbationCoefficients solve_first_order_condition(const PerturbationCoefficients& coeffs, const CenterIntegrals& integrals) {
    PerturbationCoefficients out = coeffs;
    const double c01 = coeffs.get(Family::c, 0, 1);
    const double c03 = coeffs.get(Family::c, 0, 3);
    const double c21 = coeffs.get(Family::c, 2, 1);
    out.set(Family::a, 1, 0, -integrals.first_order_ratio() * c01);
    out.set(Family::a, 3, 0, -2.0 * c03 - c21);
    return out;
}

PeriodicKernels periodic_kernels(const PerturbationCoefficients& coeffs, double r0, std::span<const double> grid,
                                 double tol) {
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    PeriodicKernels k;
    k.r0 = r0;
    k.theta_grid.assign(grid.begin(), grid.end());
    k.rs_values.resize(grid.size());
    k.u_values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double e = kernel_exponent(grid[j]);
        k.u_values[j] = e;
        k.rs_values[j] = r0 * e;
    }
    bool first_order_present = false;
    for (Family f : {Family::a, Family::c}) {
        for (double v : coeffs.family(f)) first_order_present = first_order_present || v != 0.0;
    }
    if (!first_order_present) {
        k.u1_values.assign(grid.size(), 0.0);
        return k;
    }
    k.u1_values = cumulative_integral(
        [&](double phi) {
            const double e = kernel_exponent(phi);
            return polar_rhs_series(coeffs, phi, r0 * e).g1 / e;
        },
        grid, 1e-2 * tol);
    return k;
}

SecondOrderValue compute_G20(const PerturbationCoefficients& coeffs, double r0, double tol, DerivativeMode mode) {
    if (!(r0 > 0.0)) throw DomainError("r0 must be positive");
    SecondOrderValue out;
    out.first_order_vanishes = first_order_vanishes(closed_form_first_order(coeffs), coeffs);
    if (coeffs.is_zero()) return out;

    std::size_t panels = kFirstPanels;
    double previous = second_order_sum(coeffs, r0, panels, tol, mode);
    while (panels < kMaxPanels) {
        panels *= 2;
        const double current = second_order_sum(coeffs, r0, panels, tol, mode);
        const double change = current - previous;
        previous = current;
        if (std::abs(change) <= tol * std::max(1.0, std::abs(current))) {
            out.value = current;
            out.error_estimate = std::abs(change);
            out.panels = panels;
            return out;
        }
    }
    throw AccuracyError("G20 quadrature did not converge", previous);
}

double AveragedPolynomial::scale() const {
    return std::max({std::abs(v6), std::abs(v4), std::abs(v2), std::abs(v0)});
}

double AveragedPolynomial::g20(double r0) const {
    const double s = r0 * r0;
    return (((v6 * s + v4) * s + v2) * s + v0) / (s * s * r0);
}

AveragedPolynomial fit_v_samples(std::span<const double> radii, std::span<const double> samples) {
    const auto n = static_cast<Eigen::Index>(radii.size());
    if (radii.size() != samples.size() || n < 7) throw DomainError("fit_v_samples: need at least 7 samples");

    Eigen::VectorXd y(n);
    Eigen::MatrixXd even(n, 4);
    Eigen::MatrixXd full(n, 7);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double r = radii[static_cast<std::size_t>(k)];
        y(k) = samples[static_cast<std::size_t>(k)];
        double power = 1.0;
        for (int e = 0; e <= 6; ++e) {
            full(k, e) = power;
            if (e % 2 == 0) even(k, 3 - e / 2) = power;  // columns r^6, r^4, r^2, 1
            power *= r;
        }
    }
    const Eigen::VectorXd v = even.colPivHouseholderQr().solve(y);
    const Eigen::VectorXd w = full.colPivHouseholderQr().solve(y);

    AveragedPolynomial poly;
    poly.v6 = v(0);
    poly.v4 = v(1);
    poly.v2 = v(2);
    poly.v0 = v(3);
    poly.fit_residual = (even * v - y).cwiseAbs().maxCoeff();
    poly.odd_terms = {w(5), w(3), w(1)};
    return poly;
}

AveragedPolynomial fit_v_polynomial(const PerturbationCoefficients& coeffs, double tol) {
    std::array<double, kFitRadii.size()> samples{};
    for (std::size_t k = 0; k < kFitRadii.size(); ++k) {
        const double r = kFitRadii[k];
        samples[k] = std::pow(r, 5) * compute_G20(coeffs, r, tol).value;
    }
    AveragedPolynomial poly = fit_v_samples(kFitRadii, samples);

    const double threshold = kStructureTolerance * std::max(1.0, poly.scale());
    const double odd = std::max({std::abs(poly.odd_terms[0]), std::abs(poly.odd_terms[1]), std::abs(poly.odd_terms[2])});
    if (poly.fit_residual > threshold || odd > threshold) {
        std::ostringstream msg;
        msg << "r0^5 G20 is not an even polynomial of degree 6: residual " << poly.fit_residual
            << ", largest odd coefficient " << odd << " (threshold " << threshold << ")";
        throw StructureError(msg.str());
    }
    return poly;
}

std::string CoefficientTable::canonical_label(std::string_view label) {
    const auto star = label.find('*');
    if (star == std::string_view::npos) return CoefficientKey::parse(label).name();
    const CoefficientKey p = CoefficientKey::parse(label.substr(0, star));
    const CoefficientKey q = CoefficientKey::parse(label.substr(star + 1));
    const auto order = [](const CoefficientKey& k) { return static_cast<int>(k.family) * 16 + static_cast<int>(k.slot); };
    return order(p) <= order(q) ? p.name() + "*" + q.name() : q.name() + "*" + p.name();
}

void CoefficientTable::add(std::string label, int slot, double value) {
    entries_.push_back({canonical_label(label), slot, value});
}

double CoefficientTable::value(std::string_view label, int slot) const {
    const std::string key = canonical_label(label);
    for (const Entry& e : entries_) {
        if (e.slot == slot && e.label == key) return e.value;
    }
    return 0.0;
}

std::vector<CoefficientTable::Entry> CoefficientTable::entries_above(double threshold) const {
    std::vector<Entry> out;
    std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
                 [&](const Entry& e) { return std::abs(e.value) > threshold; });
    return out;
}

std::vector<CoefficientKey> free_first_order_keys() {
    std::vector<CoefficientKey> keys;
    for (Family f : {Family::a, Family::c}) {
        for (std::size_t s = 0; s < kMonomialCount; ++s) {
            const CoefficientKey k{f, s};
            if (f == Family::a && ((k.i() == 1 && k.j() == 0) || (k.i() == 3 && k.j() == 0))) continue;
            keys.push_back(k);
        }
    }
    return keys;
}

CoefficientTable bilinear_table(double tol) {
    constexpr std::array<int, 4> slots = {6, 4, 2, 0};
    const auto slot_values = [](const AveragedPolynomial& p) { return std::array<double, 4>{p.v6, p.v4, p.v2, p.v0}; };
    const auto v_of = [&](const PerturbationCoefficients& c) { return slot_values(fit_v_polynomial(solve_first_order_condition(c), tol)); };

    CoefficientTable table;
    const std::vector<CoefficientKey> keys = free_first_order_keys();
    std::vector<std::array<double, 4>> single(keys.size());
    for (std::size_t p = 0; p < keys.size(); ++p) {
        single[p] = v_of(PerturbationCoefficients{}.set(keys[p], 1.0));
        for (std::size_t m = 0; m < 4; ++m) table.add(keys[p].name() + "*" + keys[p].name(), slots[m], single[p][m]);
    }
    for (std::size_t p = 0; p < keys.size(); ++p) {
        for (std::size_t q = p + 1; q < keys.size(); ++q) {
            const auto both = v_of(PerturbationCoefficients{}.set(keys[p], 1.0).set(keys[q], 1.0));
            for (std::size_t m = 0; m < 4; ++m) {
                table.add(keys[p].name() + "*" + keys[q].name(), slots[m], both[m] - single[p][m] - single[q][m]);
            }
        }
    }
    for (Family f : {Family::b, Family::d}) {
        for (std::size_t s = 0; s < kMonomialCount; ++s) {
            const CoefficientKey k{f, s};
            const auto lin = v_of(PerturbationCoefficients{}.set(k, 1.0));
            for (std::size_t m = 0; m < 4; ++m) table.add(k.name(), slots[m], lin[m]);
        }
    }
    return table;
}

FirstOrderRoot first_order_root(const FirstOrderAverage& avg) {
    if (avg.alpha == 0.0 && avg.beta == 0.0) return {FirstOrderRoot::Outcome::identically_zero, std::nullopt};
    if (avg.alpha * avg.beta < 0.0) return {FirstOrderRoot::Outcome::root, std::sqrt(-avg.alpha / avg.beta)};
    return {FirstOrderRoot::Outcome::none, std::nullopt};
}

}  // namespace degcenter
