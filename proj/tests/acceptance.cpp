// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "degcenter/averaging.hpp"
#include "degcenter/builtin_systems.hpp"
#include "degcenter/errors.hpp"
#include "degcenter/poincare.hpp"
#include "degcenter/polar_series.hpp"
#include "degcenter/roots.hpp"
#include "support.hpp"

using namespace degcenter;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%s  %-3s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void criterion1() {
    constexpr double kTol = 1e-8;
    constexpr double kLimit = 1.0;
    const auto t0 = Clock::now();
    const auto ci = center_integrals(1e-10);
    const double gap = std::max({std::abs(ci.i1 - 3.572403292), std::abs(ci.i2 - 5.985557563),
                                 std::abs(ci.i3 - 21.62373221)});
    const double t = seconds_since(t0);
    report("1", gap <= kTol && t < kLimit,
           fmt("center integrals: I1=%.10f I2=%.10f I3=%.9f, max gap %.2e (tol %.0e), %.3f s (limit %.0f s)", ci.i1,
               ci.i2, ci.i3, gap, kTol, t, kLimit));
}

void criterion2() {
    constexpr double kRatioTol = 1e-7;
    constexpr double kG10Tol = 1e-8;
    constexpr double kLimit = 10.0;
    const auto t0 = Clock::now();
    const auto ci = center_integrals(1e-10);
    const double ratio_gap = std::abs(-ci.first_order_ratio() - (-17.65322447));
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const auto c = testing::random_admissible(rng);
        for (double r0 : {0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(first_order_by_quadrature(c, r0)));
    }
    const double t = seconds_since(t0);
    report("2", ratio_gap < kRatioTol && worst < kG10Tol && t < kLimit,
           fmt("first-order condition: ratio %.10f gap %.2e (tol %.0e); max |G10| after solve over 20 sets %.2e "
               "(tol %.0e); %.3f s (limit %.0f s)",
               -ci.first_order_ratio(), ratio_gap, kRatioTol, worst, kG10Tol, t, kLimit));
}

void criterion3() {
    constexpr double kRelTol = 1e-4;
    constexpr double kLimit = 120.0;
    struct Row {
        const char* label;
        int slot;
        double value;
    };
    const std::vector<Row> rows = {
        {"a00*c00", 0, 665.2264933}, {"a01*c01", 2, 239.0000390}, {"a00*c02", 2, 95.95703341},
        {"c00*c11", 2, -110.9164314}, {"c01*c10", 2, -257.2692783}, {"b10", 4, 1.159249021},
        {"d01", 4, 20.46448319},     {"a02*c02", 4, 14.47892563}, {"d03", 6, 3.141592654},
        {"b30", 6, 1.570796327},     {"a03*c03", 6, 2.159844949},
    };
    const auto t0 = Clock::now();
    const auto table = bilinear_table(1e-10);
    double worst = 0.0;
    std::string worst_label;
    for (const auto& r : rows) {
        const double gap = testing::rel_gap(table.value(r.label, r.slot), r.value);
        if (gap >= worst) {
            worst = gap;
            worst_label = r.label;
        }
    }
    const double t = seconds_since(t0);
    report("3", worst <= kRelTol && t < kLimit,
           fmt("coefficient table: 11 entries, max relative gap %.2e at %s (tol %.0e); %.2f s (limit %.0f s)", worst,
               worst_label.c_str(), kRelTol, t, kLimit));
}

void criterion4() {
    constexpr double kSlotTol = 1e-4;
    constexpr double kRoot12Tol = 1e-3;
    constexpr double kRoot13Tol = 1e-5;
    constexpr double kLimit = 60.0;
    const auto t0 = Clock::now();
    bool ok = true;
    double worst_slot = 0.0;
    std::string counts;
    double root12 = 0.0;
    double root13 = 0.0;
    for (const auto& sys : builtin_systems()) {
        const auto report = limit_cycle_report(sys.coefficients);
        if (!report.polynomial) {
            ok = false;
            continue;
        }
        const auto& p = *report.polynomial;
        const double gaps[] = {testing::rel_gap(p.v6, sys.v6), testing::rel_gap(p.v4, sys.v4),
                               testing::rel_gap(p.v2, sys.v2), testing::rel_gap(p.v0, sys.v0)};
        for (double g : gaps) worst_slot = std::max(worst_slot, g);
        const int n = report.roots.predicted_cycles;
        counts += fmt("%s%d", counts.empty() ? "" : "/", n);
        ok = ok && n == sys.expected_cycles;
        if (sys.id == 12 && n == 2) {
            root12 = std::max(std::abs(report.roots.positive_roots[0].r0 - 1.0),
                              std::abs(report.roots.positive_roots[1].r0 - 2.0));
        }
        if (sys.id == 13 && n == 1) root13 = std::abs(report.roots.positive_roots[0].r0 - 1.097575824);
    }
    const double t = seconds_since(t0);
    ok = ok && worst_slot <= kSlotTol && root12 <= kRoot12Tol && root13 <= kRoot13Tol && t < kLimit;
    report("4", ok,
           fmt("examples 11-14: max slot gap %.2e (tol %.0e); cycles %s (want 3/2/1/0); root gaps 12: %.2e (tol %.0e), "
               "13: %.2e (tol %.0e); %.2f s (limit %.0f s)",
               worst_slot, kSlotTol, counts.c_str(), root12, kRoot12Tol, root13, kRoot13Tol, t, kLimit));
}

void criterion5() {
    constexpr double kEpsilon = 1e-3;
    constexpr double kWindow = 0.05;
    constexpr double kLimit = 120.0;
    const auto t0 = Clock::now();

    bool counts_ok = true;
    std::string counts;
    bool locations_ok = true;
    std::string locations;
    for (const auto& sys : builtin_systems()) {
        const auto fp = fixed_points(sys.coefficients, kEpsilon, sys.scan_min, sys.scan_max);
        const auto predicted = limit_cycle_report(sys.coefficients).roots;
        counts += fmt("%s%zu", counts.empty() ? "" : "/", fp.points.size());
        counts_ok = counts_ok && static_cast<int>(fp.points.size()) == predicted.predicted_cycles;
        for (const auto& root : predicted.positive_roots) {
            double nearest = NAN;
            for (double p : fp.points) {
                if (std::isnan(nearest) || std::abs(p - root.r0) < std::abs(nearest - root.r0)) nearest = p;
            }
            const double gap = std::isnan(nearest) ? INFINITY : std::abs(nearest - root.r0);
            const bool ok = gap <= kWindow;
            locations_ok = locations_ok && ok;
            locations += fmt(" %d:%.4f->%.4f(%s)", sys.id, root.r0, nearest, ok ? "ok" : "off");
        }
    }
    report("5a", counts_ok, fmt("fixed-point counts at eps=%.0e: %s (want 3/2/1/0)", kEpsilon, counts.c_str()));
    report("5b", locations_ok,
           fmt("fixed points within %.2f of predicted r0:%s", kWindow, locations.c_str()));

    const std::vector<double> eps = {4e-3, 2e-3, 1e-3};
    const auto study = convergence_study(builtin_system(12).coefficients, eps, 2.0);
    std::string gaps;
    for (const auto& row : study.rows) gaps += row.gap ? fmt(" %.3e", *row.gap) : std::string(" lost");
    const double t = seconds_since(t0);
    report("5c", study.monotone && t < kLimit,
           fmt("system 12 gap to r*=2 over eps 4e-3,2e-3,1e-3:%s, non-increasing=%s; %.2f s for 5a-5c (limit %.0f s)",
               gaps.c_str(), study.monotone ? "yes" : "no", t, kLimit));
}

void criterion6() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(6);

    {  // even-Laurent structure, and never more than three simple positive roots
        constexpr double kTol = 1e-6;
        double worst = 0.0;
        int max_cycles = 0;
        for (int k = 0; k < 50; ++k) {
            const auto c = testing::random_admissible(rng);
            const auto samples = [&] {
                std::vector<double> s;
                for (double r : kFitRadii) s.push_back(std::pow(r, 5) * compute_G20(c, r).value);
                return s;
            }();
            const auto p = fit_v_samples(kFitRadii, samples);
            const double scale = std::max(1.0, p.scale());
            for (double odd : p.odd_terms) worst = std::max(worst, std::abs(odd) / scale);
            max_cycles = std::max(max_cycles, positive_roots(p).predicted_cycles);
        }
        report("6a", worst < kTol,
               fmt("even Laurent structure: max odd coefficient / scale over 50 sets %.2e (tol %.0e)", worst, kTol));
        report("6b", max_cycles <= 3, fmt("at most three simple positive roots: max over 50 sets %d", max_cycles));
    }

    {  // homogeneity
        constexpr double kTol = 1e-9;
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            const auto first = testing::random_admissible(rng, false);
            const double lambda = 1.0 + 0.5 * k;
            const double g = compute_G20(first, 1.1, 1e-12).value;
            worst = std::max(worst, testing::rel_gap(compute_G20(first.scaled(lambda, 1.0), 1.1, 1e-12).value,
                                                     lambda * lambda * g));
            const auto second = testing::random_coefficients(rng, false, true);
            const double h = compute_G20(second, 0.9, 1e-12).value;
            worst = std::max(worst, testing::rel_gap(compute_G20(second.scaled(1.0, -lambda), 0.9, 1e-12).value,
                                                     -lambda * h));
        }
        report("6c", worst < kTol,
               fmt("homogeneity: quadratic in first order, linear in second, max relative gap %.2e (tol %.0e)", worst,
                   kTol));
    }

    {  // Descartes
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        int violations = 0;
        for (int k = 0; k < 1000; ++k) {
            AveragedPolynomial p;
            p.v6 = dist(rng);
            p.v4 = dist(rng);
            p.v2 = dist(rng);
            p.v0 = dist(rng);
            const auto r = positive_roots(p);
            if (static_cast<int>(r.positive_roots.size()) > r.descartes_bound) ++violations;
        }
        report("6d", violations == 0, fmt("Descartes bound over 1000 random quadruples: %d violations", violations));
    }

    {  // first integral along unperturbed orbits
        constexpr double kTol = 1e-8;
        double worst = 0.0;
        for (double r : {0.2, 0.6, 1.0, 1.8, 3.0}) {
            for (double angle : {0.0, 0.8, 2.2}) {
                const PlanarPoint start{r * std::cos(angle), r * std::sin(angle)};
                const double h0 = first_integral(start);
                for (const auto& p : orbit_trace({}, 0.0, start, 1, 1e-10).points) {
                    worst = std::max(worst, std::abs(first_integral(p) - h0) / h0);
                }
            }
        }
        report("6e", worst <= kTol, fmt("H conserved along unperturbed orbits: max relative drift %.2e (tol %.0e)",
                                        worst, kTol));
    }

    {  // return map identity
        constexpr double kTol = 1e-9;
        const auto c = testing::random_admissible(rng);
        double worst = 0.0;
        for (double r0 = 0.2; r0 <= 3.0 + 1e-12; r0 += 0.1) {
            worst = std::max(worst, std::abs(return_map(c, 0.0, r0).displacement));
        }
        report("6f", worst <= kTol, fmt("return map identity at eps=0: max |displacement| %.2e (tol %.0e)", worst, kTol));
    }

    {  // derivative paths
        constexpr double kTol = 1e-6;
        constexpr double h = 1e-5;
        std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
        std::uniform_real_distribution<double> radius(0.3, 3.0);
        double worst = 0.0;
        for (int k = 0; k < 500; ++k) {
            const auto c = testing::random_coefficients(rng);
            const double t = angle(rng);
            const double r = radius(rng);
            const double fd = (polar_rhs_series(c, t, r + h).g1 - polar_rhs_series(c, t, r - h).g1) / (2 * h);
            worst = std::max(worst, std::abs(dG1_dr(c, t, r) - fd));
        }
        report("6g", worst <= kTol,
               fmt("analytic vs finite-difference dG1/dr over 500 points: max gap %.2e (tol %.0e); 6a-6g %.2f s", worst,
                   kTol, seconds_since(t0)));
    }
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    const double t = seconds_since(t0);
    constexpr double kSuiteLimit = 300.0;
    report("all", failures == 0 && t < kSuiteLimit,
           fmt("%d failing line(s); total %.1f s (limit %.0f s)", failures, t, kSuiteLimit));
    return failures == 0 ? 0 : 1;
}
