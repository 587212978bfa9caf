#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degcenter {

/// Input outside the mathematical domain of an operation (r <= 0, the origin for H, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed coefficient file. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A quadrature did not reach its tolerance; carries the best value found.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// The angular velocity stopped being positive, so theta is no longer a valid time.
class SectionLostError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The adaptive integrator could not make progress.
class StiffnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerically computed quantity violated a structure that holds exactly in theory.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagree.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace degcenter
