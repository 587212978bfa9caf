#include "degcenter/polar_series.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "degcenter/errors.hpp"

namespace degcenter {

namespace {

void require_positive_radius(double r) {
    if (!(r > 0.0)) throw DomainError("radius must be positive, got " + std::to_string(r));
}

/// Inverse of the generalized Vandermonde matrix V[k][m] = radii[k]^(min_exponent + m).
template <std::size_t N>
auto vandermonde_inverse(const std::array<double, N>& radii, int min_exponent) {
    Eigen::Matrix<double, static_cast<int>(N), static_cast<int>(N)> v;
    for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t m = 0; m < N; ++m) {
            v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m)) = std::pow(radii[k], min_exponent + static_cast<int>(m));
        }
    }
    return decltype(v)(v.fullPivLu().inverse());
}

template <std::size_t N, typename Inverse, typename Sample>
RadialLaurent solve_laurent(const std::array<double, N>& radii, int min_exponent, const Inverse& inverse,
                            Sample sample) {
    Eigen::Matrix<double, static_cast<int>(N), 1> values;
    for (std::size_t k = 0; k < N; ++k) values(static_cast<Eigen::Index>(k)) = sample(radii[k]);
    const Eigen::Matrix<double, static_cast<int>(N), 1> c = inverse * values;
    return {min_exponent, std::vector<double>(c.data(), c.data() + N)};
}

}  // namespace

double RadialLaurent::coefficient(int exponent) const {
    if (exponent < min_exponent || exponent > max_exponent()) return 0.0;
    return coefficients[static_cast<std::size_t>(exponent - min_exponent)];
}

double RadialLaurent::operator()(double r) const {
    double sum = 0.0;
    double power = std::pow(r, min_exponent);
    for (double c : coefficients) {
        sum += c * power;
        power *= r;
    }
    return sum;
}

double RadialLaurent::derivative(double r) const {
    double sum = 0.0;
    int e = min_exponent;
    for (double c : coefficients) {
        if (e != 0) sum += c * e * std::pow(r, e - 1);
        ++e;
    }
    return sum;
}

EpsilonExpansion polar_rhs_series(const PerturbationCoefficients& coeffs, double theta, double r) {
    require_positive_radius(r);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double x = r * c;
    const double y = r * s;

    const double p1 = eval_polynomial(coeffs.family(Family::a), x, y);
    const double q1 = eval_polynomial(coeffs.family(Family::c), x, y);
    const double p2 = eval_polynomial(coeffs.family(Family::b), x, y);
    const double q2 = eval_polynomial(coeffs.family(Family::d), x, y);

    // r' = (x x' + y y')/r and theta' = (x y' - y x')/r^2, split by powers of eps.
    // The unperturbed parts reduce to N0 = -2 r^3 cos sin and D0 = r^2.
    const double n1 = c * p1 + s * q1;
    const double n2 = c * p2 + s * q2;
    const double d1 = (c * q1 - s * p1) / r;
    const double d2 = (c * q2 - s * p2) / r;
    const double d0 = r * r;

    EpsilonExpansion e;
    e.g0 = -2.0 * r * c * s;
    e.g1 = (n1 - e.g0 * d1) / d0;
    e.g2 = (n2 - e.g1 * d1 - e.g0 * d2) / d0;
    return e;
}

RadialLaurent laurent_G1(const PerturbationCoefficients& coeffs, double theta) {
    static const auto inverse = vandermonde_inverse(kG1ProbeRadii, -2);
    return solve_laurent(kG1ProbeRadii, -2, inverse,
                         [&](double r) { return polar_rhs_series(coeffs, theta, r).g1; });
}

RadialLaurent laurent_G2(const PerturbationCoefficients& coeffs, double theta) {
    static const auto inverse = vandermonde_inverse(kG2ProbeRadii, -5);
    return solve_laurent(kG2ProbeRadii, -5, inverse,
                         [&](double r) { return polar_rhs_series(coeffs, theta, r).g2; });
}

RadialLaurent fit_G1_laurent(const PerturbationCoefficients& coeffs, double theta, int min_exponent,
                             int max_exponent, std::span<const double> radii) {
    const int n = max_exponent - min_exponent + 1;
    if (n <= 0 || static_cast<int>(radii.size()) < n) {
        throw DomainError("fit_G1_laurent: need at least as many radii as exponents");
    }
    Eigen::MatrixXd v(static_cast<Eigen::Index>(radii.size()), n);
    Eigen::VectorXd values(static_cast<Eigen::Index>(radii.size()));
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const auto row = static_cast<Eigen::Index>(k);
        for (int m = 0; m < n; ++m) v(row, m) = std::pow(radii[k], min_exponent + m);
        values(row) = polar_rhs_series(coeffs, theta, radii[k]).g1;
    }
    const Eigen::VectorXd c = v.colPivHouseholderQr().solve(values);
    return {min_exponent, std::vector<double>(c.data(), c.data() + n)};
}

double dG1_dr(const PerturbationCoefficients& coeffs, double theta, double r) {
    require_positive_radius(r);
    const RadialLaurent g1 = laurent_G1(coeffs, theta);
    const double inv = 1.0 / r;
    return -2.0 * g1.coefficients[0] * inv * inv * inv - g1.coefficients[1] * inv * inv + g1.coefficients[3];
}

double full_rhs(const PerturbationCoefficients& coeffs, double epsilon, double theta, double r) {
    require_positive_radius(r);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (epsilon == 0.0) return -2.0 * r * c * s;
    const double x = r * c;
    const double y = r * s;

    double radial = -2.0 * r * r * r * c * s;
    double angular = r * r;
    {
        const double e2 = epsilon * epsilon;
        const double dx = epsilon * eval_polynomial(coeffs.family(Family::a), x, y) +
                          e2 * eval_polynomial(coeffs.family(Family::b), x, y);
        const double dy = epsilon * eval_polynomial(coeffs.family(Family::c), x, y) +
                          e2 * eval_polynomial(coeffs.family(Family::d), x, y);
        radial += c * dx + s * dy;
        angular += (c * dy - s * dx) / r;
    }
    if (!(angular > 0.0)) {
        throw SectionLostError("angular velocity is not positive at r = " + std::to_string(r) +
                               ", theta = " + std::to_string(theta) + "; reduce epsilon");
    }
    return radial / angular;
}

}  // namespace degcenter
