#include <CLI11.hpp>

#include "cli.hpp"

namespace degcenter::cli {

namespace {

void add_tolerance(CLI::App* cmd, std::optional<double>& tol) {
    cmd->add_option("--tol", tol, "tolerance for every quadrature, integration and root layer")
        ->check(CLI::PositiveNumber);
}

Tolerances resolve(const std::optional<double>& tol) { return tol ? Tolerances::uniform(*tol) : Tolerances{}; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Second-order averaging analysis for cubic perturbations of a degenerate center", "degcenter"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    std::optional<double> tol;

    auto* integrals = app.add_subcommand("integrals", "print the center integrals I1, I2, I3 and the first-order ratio");
    add_tolerance(integrals, tol);

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "averaged functions, roots and predicted cycle count");
    analyze_cmd->add_option("file", analyze.coeff_file, "coefficient file")->required();
    analyze_cmd->add_flag("--solve-first-order", analyze.solve_first_order, "set a10 and a30 so that G10 vanishes");
    add_tolerance(analyze_cmd, tol);

    VerifyOptions verify;
    std::vector<double> range;
    auto* verify_cmd = app.add_subcommand("verify", "locate fixed points of the return map and compare");
    verify_cmd->add_option("file", verify.coeff_file, "coefficient file")->required();
    verify_cmd->add_option("--epsilon", verify.epsilon, "perturbation size")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--range", range, "radial scan interval A B")->expected(2);
    verify_cmd->add_option("--out", verify.csv_out, "write the displacement scan as CSV");
    add_tolerance(verify_cmd, tol);

    ReproduceOptions reproduce;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "compare a built-in example against reference values");
    reproduce_cmd->add_option("id", reproduce.id, "11, 12, 13, 14, table or lemma5")
        ->required()
        ->check(CLI::IsMember({"11", "12", "13", "14", "table", "lemma5"}));
    add_tolerance(reproduce_cmd, tol);

    OrbitsOptions orbits;
    std::vector<double> start;
    auto* orbits_cmd = app.add_subcommand("orbits", "trace an orbit in Cartesian coordinates");
    orbits_cmd->add_option("file", orbits.coeff_file, "coefficient file")->required();
    orbits_cmd->add_option("--start", start, "initial point X Y")->expected(2)->required();
    orbits_cmd->add_option("--revs", orbits.revolutions, "number of revolutions")->required()->check(
        CLI::PositiveNumber);
    orbits_cmd->add_option("--out", orbits.out, "CSV output file")->required();
    orbits_cmd->add_option("--epsilon", orbits.epsilon, "perturbation size (default 0)")->check(
        CLI::NonNegativeNumber);
    add_tolerance(orbits_cmd, tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    if (integrals->parsed()) return cmd_integrals(resolve(tol), out, err);
    if (analyze_cmd->parsed()) {
        analyze.tol = resolve(tol);
        return cmd_analyze(analyze, out, err);
    }
    if (verify_cmd->parsed()) {
        verify.tol = resolve(tol);
        if (range.size() == 2) {
            verify.range_min = range[0];
            verify.range_max = range[1];
        }
        return cmd_verify(verify, out, err);
    }
    if (reproduce_cmd->parsed()) {
        reproduce.tol = resolve(tol);
        return cmd_reproduce(reproduce, out, err);
    }
    orbits.tol = resolve(tol);
    orbits.x = start[0];
    orbits.y = start[1];
    return cmd_orbits(orbits, out, err);
}

}  // namespace degcenter::cli
