#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "degcenter/averaging.hpp"
#include "degcenter/errors.hpp"
#include "detail.hpp"

namespace degcenter::cli {

namespace detail {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PerturbationCoefficients load_coefficients(const std::string& path, RunManifest& manifest) {
    const std::string text = read_file(path);
    manifest.input_digest = sha256_hex(text);
    try {
        return parse_coefficients(std::string_view(text));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

int guarded(RunManifest& manifest, std::ostream& out, std::ostream& err, const std::function<int()>& body) {
    int code = kSuccess;
    try {
        code = body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        code = kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        code = kInputError;
    } catch (const SectionLostError& e) {
        err << "numerical failure: " << e.what()
            << "\nthe perturbation is too large for the angle to stay monotone; reduce --epsilon\n";
        code = kNumericalFailure;
    } catch (const AccuracyError& e) {
        err << "numerical failure: " << e.what() << format(" (best estimate %.10g)\n", e.best_estimate());
        code = kNumericalFailure;
    } catch (const std::runtime_error& e) {
        err << "numerical failure: " << e.what() << '\n';
        code = kNumericalFailure;
    }
    out.flush();
    err << format("%s finished in %.3f s (exit %d)\n", manifest.command.c_str(), manifest.elapsed_seconds(), code);
    return code;
}

void write_root_report(std::ostream& out, const RootReport& r) {
    out << "descartes bound: " << r.descartes_bound << '\n';
    if (r.positive_roots.empty()) out << "positive roots: none\n";
    for (const auto& root : r.positive_roots) {
        out << format("positive root: r0 = %.10f  dp/ds = %.3e  %s\n", root.r0, root.derivative,
                      root.simple ? "simple" : "not simple");
    }
    if (r.order == RootReport::Order::second) {
        out << "discarded complex pairs: " << r.discarded_complex_pairs << '\n';
    }
    out << "predicted cycles: " << r.predicted_cycles << '\n';
}

void write_csv_section(std::ostream& out, const std::string& path, const std::string& csv) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << csv;
    out << "\n# csv (" << path << ")\n" << csv;
}

}  // namespace detail

using namespace detail;

int cmd_integrals(const Tolerances& tol, std::ostream& out, std::ostream& err) {
    RunManifest manifest{.command = "integrals", .tolerances = tol, .version = tool_version()};
    manifest.write(out);
    return guarded(manifest, out, err, [&] {
        const CenterIntegrals ci = center_integrals(tol.quadrature);
        out << format("I1 = %.12g\n", ci.i1);
        out << format("I2 = %.12g\n", ci.i2);
        out << format("I3 = %.12g\n", ci.i3);
        out << format("ratio (I3 - 2 I1 + I2)/(2 I1 - I2) = %.12g\n", ci.first_order_ratio());
        out << format("first-order condition: a10 = %.12g * c01, a30 = -2 c03 - c21\n", -ci.first_order_ratio());
        return kSuccess;
    });
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    RunManifest manifest{.command = "analyze " + opts.coeff_file + (opts.solve_first_order ? " --solve-first-order" : ""),
                         .tolerances = opts.tol,
                         .version = tool_version()};
    return guarded(manifest, out, err, [&] {
        PerturbationCoefficients coeffs = load_coefficients(opts.coeff_file, manifest);
        manifest.write(out);

        const FirstOrderAverage g10 = first_order_structure(coeffs, opts.tol.quadrature);
        out << "# first order: G10(r0) = alpha/r0 + beta r0\n";
        out << format("alpha = %.10g\nbeta = %.10g\n", g10.alpha, g10.beta);

        if (opts.solve_first_order) {
            coeffs = solve_first_order_condition(coeffs);
            out << "first-order condition applied:\n";
            out << format("a10 = %.10g\na30 = %.10g\n", coeffs.get("a10"), coeffs.get("a30"));
        }

        const LimitCycleReport report = limit_cycle_report(coeffs, opts.tol.quadrature, opts.tol.root);
        if (!report.first_order_vanishes) {
            out << "notice: G10 does not vanish identically; reporting the first-order prediction "
                   "(rerun with --solve-first-order for the second order)\n";
            write_root_report(out, report.roots);
            return kSuccess;
        }
        if (report.roots.outcome == RootReport::Outcome::identically_zero) {
            out << "notice: G10 and G20 identically zero; averaging to second order predicts nothing\n";
            return kSuccess;
        }
        const AveragedPolynomial& p = *report.polynomial;
        out << "\n# second order: r0^5 G20(r0) = v6 r0^6 + v4 r0^4 + v2 r0^2 + v0\n";
        out << format("v6 = %.10g\nv4 = %.10g\nv2 = %.10g\nv0 = %.10g\n", p.v6, p.v4, p.v2, p.v0);
        out << format("fit residual: %.3e\n", p.fit_residual);
        out << format("odd terms (r0^5, r0^3, r0): %.3e %.3e %.3e\n", p.odd_terms[0], p.odd_terms[1], p.odd_terms[2]);
        write_root_report(out, report.roots);
        return kSuccess;
    });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    RunManifest manifest{.command = format("verify %s --epsilon %.6g --range %.6g %.6g", opts.coeff_file.c_str(),
                                           opts.epsilon, opts.range_min, opts.range_max),
                         .tolerances = opts.tol,
                         .version = tool_version()};
    return guarded(manifest, out, err, [&] {
        if (!(opts.epsilon > 0.0)) throw InputError("--epsilon must be positive");
        if (!(opts.range_min > 0.0 && opts.range_min < opts.range_max)) {
            throw InputError("--range needs 0 < A < B");
        }
        const PerturbationCoefficients coeffs = load_coefficients(opts.coeff_file, manifest);
        manifest.write(out);

        const LimitCycleReport report = limit_cycle_report(coeffs, opts.tol.quadrature, opts.tol.root);
        out << "# prediction (order " << static_cast<int>(report.roots.order) << ")\n";
        write_root_report(out, report.roots);

        ScanOptions scan;
        scan.ode_tol = opts.tol.ode;
        const FixedPointScan fp = fixed_points(coeffs, opts.epsilon, opts.range_min, opts.range_max, scan);
        out << format("\n# return map at epsilon = %.6g over [%.6g, %.6g]\n", opts.epsilon, opts.range_min,
                      opts.range_max);
        if (fp.outcome == FixedPointScan::Outcome::identically_zero) {
            out << "displacement identically zero\n";
            return kSuccess;
        }
        out << "fixed points: " << fp.points.size() << '\n';
        for (double r : fp.points) out << format("fixed point: r0 = %.10f\n", r);

        out << "\n# comparison\npredicted        nearest          gap\n";
        for (const auto& root : report.roots.positive_roots) {
            if (!root.simple) continue;
            double nearest = NAN;
            for (double r : fp.points) {
                if (std::isnan(nearest) || std::abs(r - root.r0) < std::abs(nearest - root.r0)) nearest = r;
            }
            if (std::isnan(nearest)) {
                out << format("%-16.10f none\n", root.r0);
            } else {
                out << format("%-16.10f %-16.10f %.3e\n", root.r0, nearest, std::abs(nearest - root.r0));
            }
        }

        const bool counts_match = static_cast<int>(fp.points.size()) == report.roots.predicted_cycles;
        out << "count check: " << (counts_match ? "match" : "MISMATCH") << '\n';

        if (opts.csv_out) {
            std::ostringstream csv;
            write_displacement_csv(csv, fp.samples);
            write_csv_section(out, *opts.csv_out, csv.str());
        }
        return counts_match ? kSuccess : kNumericalFailure;
    });
}

int cmd_orbits(const OrbitsOptions& opts, std::ostream& out, std::ostream& err) {
    RunManifest manifest{.command = format("orbits %s --start %.6g %.6g --revs %d --epsilon %.6g", opts.coeff_file.c_str(),
                                           opts.x, opts.y, opts.revolutions, opts.epsilon),
                         .tolerances = opts.tol,
                         .version = tool_version()};
    return guarded(manifest, out, err, [&] {
        if (opts.revolutions < 1) throw InputError("--revs must be at least 1");
        if (opts.epsilon < 0.0) throw InputError("--epsilon must be non-negative");
        const PerturbationCoefficients coeffs = load_coefficients(opts.coeff_file, manifest);
        manifest.write(out);

        const OrbitTrace trace = orbit_trace(coeffs, opts.epsilon, {opts.x, opts.y}, opts.revolutions, opts.tol.ode);
        const PlanarPoint end = trace.points.back();
        out << format("start: (%.10g, %.10g)\n", opts.x, opts.y);
        out << format("end: (%.10g, %.10g) after %d revolutions, t = %.10g\n", end.x, end.y, opts.revolutions,
                      trace.times.back());
        out << format("H(start) = %.10g\nH(end) = %.10g\n", first_integral({opts.x, opts.y}), first_integral(end));
        out << "samples: " << trace.points.size() << '\n';

        std::ostringstream csv;
        write_orbit_csv(csv, trace);
        write_csv_section(out, opts.out, csv.str());
        return kSuccess;
    });
}

}  // namespace degcenter::cli
