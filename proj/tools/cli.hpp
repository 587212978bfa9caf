#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "degcenter/poincare.hpp"
#include "degcenter/quadrature.hpp"
#include "degcenter/roots.hpp"

namespace degcenter::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kNumericalFailure = 3 };

struct Tolerances {
    double quadrature = kDefaultTolerance;
    double ode = kDefaultOdeTolerance;
    double root = kDefaultRootTolerance;

    /// --tol T sets every layer to T.
    static Tolerances uniform(double t) { return {t, t, t}; }
};

/// Provenance block written at the top of every report. The wall-clock
/// duration goes to stderr so that reports stay byte-identical between runs.
struct RunManifest {
    std::string command;
    std::string input_digest = "none";  ///< sha256 of the input file
    Tolerances tolerances;
    std::string version;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void write(std::ostream& out) const;
    double elapsed_seconds() const;
};

std::string sha256_hex(const std::string& bytes);
std::string tool_version();

/// printf into a std::string.
std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

struct AnalyzeOptions {
    std::string coeff_file;
    bool solve_first_order = false;
    Tolerances tol;
};

struct VerifyOptions {
    std::string coeff_file;
    double epsilon = kDefaultEpsilon;
    double range_min = 0.2;
    double range_max = 3.0;
    std::optional<std::string> csv_out;
    Tolerances tol;
};

struct ReproduceOptions {
    std::string id;  ///< 11, 12, 13, 14, table or lemma5
    Tolerances tol;
};

struct OrbitsOptions {
    std::string coeff_file;
    double epsilon = 0.0;
    double x = 1.0;
    double y = 0.0;
    int revolutions = 1;
    std::string out;
    Tolerances tol;
};

int cmd_integrals(const Tolerances& tol, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);
int cmd_orbits(const OrbitsOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches. Usage errors return kInputError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degcenter::cli
