#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphdyn {

/// Raised when input data violates a structural requirement (unknown
/// vertex, mismatched universes, infeasible sampling radius, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for parse failures; carries the 1-based line number.
class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an iterative computation does not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace graphdyn
