#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "cli.hpp"

namespace degcenter::cli::detail {

/// Bad user input: unreadable file, bad flag value. Maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
PerturbationCoefficients load_coefficients(const std::string& path, RunManifest& manifest);

/// Runs `body`, maps exceptions to exit codes and logs the duration on `err`.
int guarded(RunManifest& manifest, std::ostream& out, std::ostream& err, const std::function<int()>& body);

void write_root_report(std::ostream& out, const RootReport& r);
/// Writes `csv` to `path` and appends it to the report.
void write_csv_section(std::ostream& out, const std::string& path, const std::string& csv);

}  // namespace degcenter::cli::detail
